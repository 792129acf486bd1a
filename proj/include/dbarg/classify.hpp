#pragma once

#include <string>

#include "dbarg/psi.hpp"

namespace dbarg {

enum class SpectrumKind { FullLine, LowerBounded, UpperBounded, FiniteWindow, NoUnitaryRep };

// Classification of the N-spectrum on the lattice mu + Z.
//   FullLine        Sp N = mu + Z (psi > 0 everywhere, non-Fock)
//   LowerBounded    Sp N = mu + nu_minus + N^+, psi(mu+nu_minus) = 0
//   UpperBounded    Sp N = mu + nu_plus + N^-, psi(mu+nu_plus+1) = 0
//   FiniteWindow    Sp N = [mu+nu_minus, mu+nu_plus] on the lattice
//   NoUnitaryRep    psi < 0 somewhere on the lattice without the zeros
//                   required to cut it away
struct SpectrumDescriptor {
  SpectrumKind kind = SpectrumKind::NoUnitaryRep;
  long nu_minus = 0;  // meaningful for LowerBounded / FiniteWindow
  long nu_plus = 0;   // meaningful for UpperBounded / FiniteWindow
  double mu = 0.0;
};

enum class Ladder { A, ADagger, None };

// Where eigenvectors of the ladder operator exist, as an annulus in |z|^2.
// origin_included marks bounded spectra whose z = 0 eigenvector is the
// terminal basis state; full-line spectra always exclude the origin.
struct CoherentDomain {
  Ladder ladder = Ladder::None;
  double inner_r2 = 0.0;
  double outer_r2 = 0.0;
  bool origin_included = false;
};

SpectrumDescriptor classify(const PsiSpec& psi);

CoherentDomain coherent_domain(const PsiSpec& psi, const SpectrumDescriptor& spec);

// The downstream modules (coherent states, weights, moments) work on a
// canonical a-ladder problem: mu folded to zero, upper-bounded spectra
// reflected onto lower-bounded ones, and lower-bounded spectra with
// nu_minus >= 0 re-indexed so the lowest state sits at n = 0.  Lower-bounded
// spectra with nu_minus < 0 keep their two-branch indexing.
struct NormalizedLadder {
  PsiSpec psi;
  SpectrumDescriptor spec;
  bool reflected = false;
};

NormalizedLadder normalize_for_ladder(const PsiSpec& psi);

std::string to_string(SpectrumKind kind);
std::string to_string(Ladder ladder);

// Short human description of the domain, e.g. "whole complex plane",
// "punctured plane 0 < |z|^2", "annulus 1 < |z|^2 < inf".
std::string describe_domain(const SpectrumDescriptor& spec, const CoherentDomain& dom);

}  // namespace dbarg
