#pragma once

#include <string>
#include <vector>

#include "lineact/rep.hpp"

namespace lineact {

struct UnsupportedOmegaPair : std::runtime_error {
  explicit UnsupportedOmegaPair(const std::string& what) : std::runtime_error(what) {}
};
struct EndpointIncompatibility : std::runtime_error {
  explicit EndpointIncompatibility(const std::string& what) : std::runtime_error(what) {}
};
struct FamilyPrecondition : std::runtime_error {
  explicit FamilyPrecondition(const std::string& what) : std::runtime_error(what) {}
};

/// Bi-infinite sign word: either periodic or a finite core padded by +1.
class OmegaWord {
 public:
  static OmegaWord periodic(const std::string& signs);  // nonempty, chars '+'/'-'
  /// core occupies positions offset .. offset+len-1; +1 everywhere else.
  static OmegaWord finite(const std::string& signs, long offset = 0);

  int at(long n) const;  // +1 or -1
  /// The shift with (shifted(k))_n = _{n-k}; shifted(1) is sigma.
  OmegaWord shifted(long k) const;
  bool is_periodic() const { return periodic_; }
  long period() const;  // for periodic words
  const std::string& pattern() const { return signs_; }
  long offset() const { return offset_; }
  std::string str() const;

 private:
  bool periodic_ = true;
  std::string signs_;
  long offset_ = 0;  // finite form only
};

/// Shift-orbit equality, decided exactly for periodic words (minimal-period
/// rotation comparison) and for finite-support words (core alignment).
/// Mixed representation classes are unsupported.
bool shift_orbit_equal(const OmegaWord& w1, const OmegaWord& w2);

struct WindowedAction {
  Representation rep;
  Window window;        // the range where the assembly is exact
  bool extrapolated;    // identity / affine continuation outside the window
};

/// The free-group action with generators (g_omega, h): g and h are the fixed
/// PL lifts with Fix(g) = (1/2)Z and Fix(h) = 1/4 + (1/2)Z, and g_omega acts
/// on [n/2, (n+1)/2] by g^{omega_n}. Both generators are assembled exactly on
/// a half-integer-aligned cover of the window and continued by the identity
/// outside it.
WindowedAction f2_family(const OmegaWord& omega, const Window& window);

/// The base lift g itself, assembled on the window.
PLMap f2_base_lift(const Window& window);

/// Affine Baumslag-Solitar action: a -> (n/m)x, b -> x+1, with the relator
/// a b^m a^-1 b^-n checked exactly and globally.
Representation bs_affine(long m, long n);

/// Interpolation path between two compatible fundamental-window maps.
/// psi0, psi1 must fix 0 and send m to n; the generator image is the
/// pointwise convex combination extended by phi(x+m) = phi(x)+n over
/// `periods` periods each side and by the affine model beyond. The relator
/// is verified exactly on the assembled window (a finite PL map can satisfy
/// it globally only in the affine case), which the representation records as
/// its relator scope.
Representation bs_path(long m, long n, const Rational& s, const PLMap& psi0, const PLMap& psi1,
                       long periods = 3);

/// Shipped non-affine PL endpoint for bs_path (a PL stand-in for the
/// analytic endpoint; one interior node at m/2 -> n/4).
PLMap bs_default_endpoint(long m, long n);

/// Brin-Navas data: f with a unique repelling fixed point inside the support
/// (x, y) of w0, with f(x) < x, y < f(y) and w0(f^-1(x)) = f^-1(y) exactly.
/// The derived tower is w_k = f^k w0 f^-k.
class BrinNavasAction {
 public:
  BrinNavasAction(PLMap f, PLMap w0);
  static BrinNavasAction standard();  // f = 2x, supp w0 = (-1, 1)

  const Representation& rep() const { return rep_; }
  const PLMap& f() const { return f_; }
  const PLMap& w0() const { return w0_; }
  PLMap w(long k) const;  // f^k w0 f^-k
  const Rational& support_left() const { return x_; }
  const Rational& support_right() const { return y_; }

 private:
  PLMap f_, w0_;
  Rational x_, y_;
  Representation rep_;
};

/// The n-th map (n >= 1) of the pinned PL-dyadic sequence on I = (-1/4, 1/4):
/// strictly above the identity on I, agrees with earlier maps outside
/// (-4^-(m+1), 4^-(m+1)), and f_n(0) = 4^-(n+1)/2. Returned as a global PLMap
/// equal to the identity outside I.
PLMap dyadic_sequence(int n);

/// Dyadic PL interpolation [p,q] -> [r,s] with power-of-two slopes: at most
/// one interior node. Returns the node list including both endpoints.
std::vector<std::pair<Rational, Rational>> dyadic_cell(const Rational& p, const Rational& q,
                                                       const Rational& r, const Rational& s);

}  // namespace lineact
