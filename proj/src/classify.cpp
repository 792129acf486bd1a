#include "dbarg/classify.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace dbarg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLatticeTol = 1e-9;

// If x lies on the lattice mu + Z (within tolerance), return its index.
bool lattice_index(double x, double mu, long* n_out) {
  const double t = x - mu;
  const double r = std::round(t);
  if (std::abs(t - r) <= kLatticeTol * (1.0 + std::abs(t))) {
    *n_out = static_cast<long>(r);
    return true;
  }
  return false;
}

}  // namespace

SpectrumDescriptor classify(const PsiSpec& psi) {
  const double mu = psi.mu();
  SpectrumDescriptor out;
  out.mu = mu;

  const std::vector<double> roots = real_zeros(psi);

  if (roots.empty()) {
    // constant sign everywhere; one sample decides
    out.kind = psi(mu) > 0.0 ? SpectrumKind::FullLine : SpectrumKind::NoUnitaryRep;
    return out;
  }

  // positive above the top root and the top root on the lattice -> Fock-like
  const double top = roots.back();
  const double bottom = roots.front();
  long n0 = 0;
  if (psi(top + 0.5) > 0.0 && lattice_index(top, mu, &n0)) {
    out.kind = SpectrumKind::LowerBounded;
    out.nu_minus = n0;
    return out;
  }
  if (psi(bottom - 0.5) > 0.0 && lattice_index(bottom, mu, &n0)) {
    out.kind = SpectrumKind::UpperBounded;
    out.nu_plus = n0 - 1;
    return out;
  }
  // adjacent root pair with positive interior and both ends on the lattice
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    long na = 0, nb = 0;
    if (psi(0.5 * (roots[i] + roots[i + 1])) > 0.0 &&
        lattice_index(roots[i], mu, &na) && lattice_index(roots[i + 1], mu, &nb)) {
      out.kind = SpectrumKind::FiniteWindow;
      out.nu_minus = na;
      out.nu_plus = nb - 1;
      return out;
    }
  }
  out.kind = SpectrumKind::NoUnitaryRep;
  return out;
}

CoherentDomain coherent_domain(const PsiSpec& psi, const SpectrumDescriptor& spec) {
  CoherentDomain dom;
  switch (spec.kind) {
    case SpectrumKind::FiniteWindow:
    case SpectrumKind::NoUnitaryRep:
      return dom;  // no eigenvectors of a or a-dagger
    case SpectrumKind::LowerBounded: {
      const double outer = asymptote(psi, Direction::PlusInfinity);
      if (!(outer > 0.0)) return dom;
      dom.ladder = Ladder::A;
      dom.inner_r2 = 0.0;
      dom.outer_r2 = outer;
      dom.origin_included = true;
      return dom;
    }
    case SpectrumKind::UpperBounded: {
      const double outer = asymptote(psi, Direction::MinusInfinity);
      if (!(outer > 0.0)) return dom;
      dom.ladder = Ladder::ADagger;
      dom.inner_r2 = 0.0;
      dom.outer_r2 = outer;
      dom.origin_included = true;
      return dom;
    }
    case SpectrumKind::FullLine: {
      const double plus = asymptote(psi, Direction::PlusInfinity);
      const double minus = asymptote(psi, Direction::MinusInfinity);
      if (plus == minus) {
        throw DegenerateDomain("coherent_domain: psi(+inf) == psi(-inf), empty annulus");
      }
      dom.ladder = plus > minus ? Ladder::A : Ladder::ADagger;
      dom.inner_r2 = std::min(plus, minus);
      dom.outer_r2 = std::max(plus, minus);
      dom.origin_included = false;
      return dom;
    }
  }
  throw Error("unreachable kind");
}

NormalizedLadder normalize_for_ladder(const PsiSpec& psi) {
  const SpectrumDescriptor spec = classify(psi);
  const CoherentDomain dom = coherent_domain(psi, spec);
  if (dom.ladder == Ladder::None) {
    throw NoCoherentStates("no ladder operator has eigenvectors for " + psi.describe());
  }

  NormalizedLadder out;
  const double mu = psi.mu();
  switch (spec.kind) {
    case SpectrumKind::LowerBounded: {
      const double shift = spec.nu_minus >= 0 ? mu + static_cast<double>(spec.nu_minus) : mu;
      out.psi = psi.shifted(shift).with_mu(0.0);
      break;
    }
    case SpectrumKind::UpperBounded:
      out.psi = psi.reflected(mu + static_cast<double>(spec.nu_plus) + 1.0).with_mu(0.0);
      out.reflected = true;
      break;
    case SpectrumKind::FullLine:
      if (dom.ladder == Ladder::ADagger) {
        out.psi = psi.reflected(mu).with_mu(0.0);
        out.reflected = true;
      } else {
        out.psi = psi.shifted(mu).with_mu(0.0);
      }
      break;
    default:
      throw Error("unreachable kind");
  }
  out.spec = classify(out.psi);
  return out;
}

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::FullLine: return "FullLine";
    case SpectrumKind::LowerBounded: return "LowerBounded";
    case SpectrumKind::UpperBounded: return "UpperBounded";
    case SpectrumKind::FiniteWindow: return "FiniteWindow";
    case SpectrumKind::NoUnitaryRep: return "NoUnitaryRep";
  }
  return "?";
}

std::string to_string(Ladder ladder) {
  switch (ladder) {
    case Ladder::A: return "a";
    case Ladder::ADagger: return "a_dagger";
    case Ladder::None: return "none";
  }
  return "?";
}

std::string describe_domain(const SpectrumDescriptor& spec, const CoherentDomain& dom) {
  if (dom.ladder == Ladder::None) return "empty (no coherent states)";
  std::ostringstream os;
  const bool outer_inf = std::isinf(dom.outer_r2);
  if (dom.origin_included && dom.inner_r2 == 0.0) {
    if (outer_inf) return "whole complex plane";
    os << "disk |z|^2 < " << dom.outer_r2;
    return os.str();
  }
  if (spec.kind == SpectrumKind::FullLine && dom.inner_r2 == 0.0 && outer_inf) {
    return "punctured plane 0 < |z|^2";
  }
  os << "annulus " << dom.inner_r2 << " < |z|^2 < ";
  if (outer_inf) {
    os << "inf";
  } else {
    os << dom.outer_r2;
  }
  return os.str();
}

}  // namespace dbarg
