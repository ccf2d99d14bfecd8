#include "hopf/family.hpp"

#include <algorithm>
#include <numeric>

namespace hopf {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t n) {
  // extended Euclid; a must be coprime to n
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(n), newr = static_cast<long long>(a % n);
  while (newr != 0) {
    long long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw InternalError("inv_mod: arguments not coprime");
  if (t < 0) t += static_cast<long long>(n);
  return static_cast<std::uint64_t>(t);
}

std::string pow_label(const std::string& g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string monomial_label(const std::string& g1, int e1, const std::string& g2, int e2) {
  std::string a = pow_label(g1, e1), b = pow_label(g2, e2);
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

// shift matrix of size n: e_t -> e_{t+1 mod n}
Mat cycle_matrix(int n) {
  Mat S(n, n);
  for (int t = 0; t < n; ++t) S.at((t + 1) % n, t) = 1;
  return S;
}

Mat diag_matrix(const std::vector<Fe>& d) {
  Mat D(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) D.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return D;
}

// the subgroup of ell-th powers of F_p^*, sorted
std::vector<Fe> power_subgroup(const PrimeField& F, int ell) {
  Fe g = field_generator(F.p());
  Fe gl = F.pow(g, static_cast<std::uint64_t>(ell));
  std::vector<Fe> out;
  Fe cur = 1;
  std::uint64_t count = (F.p() - 1) / std::gcd<std::uint64_t>(ell, F.p() - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = F.mul(cur, gl);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Fe> roots_of_unity(const PrimeField& F, int ell) {
  Fe w = (static_cast<std::uint64_t>(ell) == F.m()) ? F.epsilon()
                                                    : primitive_root_of_unity(F.p(), ell);
  std::vector<Fe> out;
  Fe cur = 1;
  for (int i = 0; i < ell; ++i) {
    out.push_back(cur);
    cur = F.mul(cur, w);
  }
  return out;
}

std::optional<Fe> ell_th_root(const PrimeField& F, Fe a, int ell) {
  if (a == 0) return Fe{0};
  if (F.p() > 5'000'000)
    throw Error("ell_th_root: prime too large for the discrete-log scan");
  Fe g = field_generator(F.p());
  std::uint64_t n = F.p() - 1;
  std::uint64_t dlog = 0;
  bool found = false;
  Fe cur = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (cur == a) {
      dlog = k;
      found = true;
      break;
    }
    cur = F.mul(cur, g);
  }
  if (!found) throw InternalError("ell_th_root: element outside the multiplicative group");
  std::uint64_t d = std::gcd<std::uint64_t>(static_cast<std::uint64_t>(ell), n);
  if (dlog % d != 0) return std::nullopt;
  std::uint64_t n2 = n / d;
  std::uint64_t li = static_cast<std::uint64_t>(ell) / d % n2;
  std::uint64_t t = n2 == 1 ? 0 : (dlog / d % n2) * inv_mod(li, n2) % n2;
  Fe r = F.pow(g, t);
  if (F.pow(r, static_cast<std::uint64_t>(ell)) != a) throw InternalError("ell_th_root: check failed");
  return r;
}

const std::vector<Character>& FiberFamily::identity_characters() const {
  if (g0_cache_.empty()) g0_cache_ = fiber_characters(identity_point());
  return g0_cache_;
}

std::set<FiberPoint> orbit_on_central_points(const FiberFamily& fam,
                                             const std::vector<Character>& chars,
                                             const FiberPoint& point, Side side) {
  std::set<FiberPoint> orbit;
  const PrimeField& F = fam.field();
  for (const Character& chi : chars) {
    std::vector<Fe> lam = fam.central_rescale(chi, side);
    FiberPoint q(point.size());
    for (size_t i = 0; i < point.size(); ++i) q[i] = F.mul(point[i], F.inv(lam[i]));
    orbit.insert(std::move(q));
  }
  return orbit;
}

std::set<FiberPoint> winding_orbit_of_identity(const FiberFamily& fam, Side side) {
  std::set<FiberPoint> orbit;
  const PrimeField& F = fam.field();
  FiberPoint id = fam.identity_point();
  for (const std::vector<Fe>& lam : fam.winding_rescales(side)) {
    FiberPoint q(id.size());
    for (size_t i = 0; i < id.size(); ++i) q[i] = F.mul(id[i], F.inv(lam[i]));
    orbit.insert(std::move(q));
  }
  return orbit;
}

// ---------------------------------------------------------------------------
// central_ext_finite: the group algebra of the central extension of
// (Z/ell)^2 by Z/ell attached to the standard 2-cocycle, fibered over
// the central group algebra of the Z/ell factor.
// ---------------------------------------------------------------------------

namespace {

class CentralExtFinite final : public FiberFamily {
public:
  CentralExtFinite(const PrimeField& F, int ell) {
    F_ = F;
    name_ = "central-ext-finite";
    ell_ = ell;
    fiber_dim_ = ell * ell;
  }

  std::string parameter_space() const override {
    return "s in Z/ell; the central generator c takes the value eps^s";
  }

  FiberPoint identity_point() const override { return {1}; }

  FiberPoint point_product(const FiberPoint& a, const FiberPoint& b) const override {
    return {F_.mul(a[0], b[0])};
  }

  FiberPoint point_antipode(const FiberPoint& a) const override { return {F_.inv(a[0])}; }

  bool point_valid(const FiberPoint& a, std::string* why) const override {
    if (a.size() != 1 || a[0] == 0 ||
        F_.pow(a[0], static_cast<std::uint64_t>(ell_)) != 1) {
      if (why) *why = "central value is not an ell-th root of unity";
      return false;
    }
    return true;
  }

  int exponent_of(Fe w) const {
    Fe cur = 1;
    for (int s = 0; s < ell_; ++s) {
      if (cur == w) return s;
      cur = F_.mul(cur, F_.epsilon());
    }
    throw ConfigError("central value is not a power of epsilon");
  }

  FiberBundle fiber(const FiberPoint& pt) const override {
    std::string why;
    if (!point_valid(pt, &why)) throw ConfigError("central-ext-finite: " + why);
    int s = exponent_of(pt[0]);
    int n = fiber_dim_;
    auto idx = [&](int i, int j) { return i * ell_ + j; };

    std::vector<std::string> labels(n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j) labels[idx(i, j)] = monomial_label("a", i, "b", j);
    std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(n) * n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j)
        for (int k = 0; k < ell_; ++k)
          for (int m = 0; m < ell_; ++m) {
            Fe c = F_.eps_pow(static_cast<long long>(s) * j * k);
            prods[static_cast<size_t>(idx(i, j)) * n + idx(k, m)].emplace_back(
                idx((i + k) % ell_, (j + m) % ell_), c);
          }
    Vec unit(n, 0);
    unit[idx(0, 0)] = 1;

    FiberBundle B;
    B.point = pt;
    B.algebra = build_algebra(F_, std::move(labels), std::move(prods), std::move(unit));

    B.pres.gen_names = {"a", "b"};
    B.pres.invertible = {true, true};
    Vec av(n, 0), bv(n, 0);
    av[idx(1 % ell_, 0)] = 1;
    bv[idx(0, 1 % ell_)] = 1;
    B.pres.gen_vectors = {av, bv};
    B.pres.relations = {
        {"a^ell = 1", Word::gen(0, ell_), Word::one()},
        {"b^ell = 1", Word::gen(1, ell_), Word::one()},
        {"ba = c ab", Word::gen(1).times(F_, Word::gen(0)),
         Word::gen(0).times(F_, Word::gen(1)).scaled(F_, pt[0])},
    };

    B.hopf.coproduct = {{{Word::gen(0), Word::gen(0)}}, {{Word::gen(1), Word::gen(1)}}};
    B.hopf.counit = {1, 1};
    B.hopf.antipode = {Word::gen(0, -1), Word::gen(1, -1)};
    B.hopf.central_labels = {"c"};

    int n0 = ell_ / std::gcd(ell_, s == 0 ? ell_ : s);
    B.seed.point = pt;
    B.seed.dim = n0;
    std::vector<Fe> diag(n0);
    for (int t = 0; t < n0; ++t) diag[t] = F_.eps_pow(static_cast<long long>(t) * s);
    B.seed.gen = {cycle_matrix(n0), diag_matrix(diag)};
    return B;
  }

  std::vector<Character> fiber_characters(const FiberPoint& pt) const override {
    FiberBundle B = fiber(pt);
    std::vector<Fe> mu = roots_of_unity(F_, ell_);
    return enumerate_characters(F_, B.pres, {mu, mu});
  }

  std::vector<std::vector<Fe>> winding_rescales(Side) const override { return {{1}}; }

  std::vector<Fe> central_rescale(const Character&, Side) const override {
    // every character of the total algebra kills the commutator c
    return {1};
  }

  ExpectedReport expected_report(const FiberPoint& pt) const override {
    int s = exponent_of(pt[0]);
    int d = std::gcd(ell_, s == 0 ? ell_ : s);
    ExpectedReport r;
    r.sd = ell_ * ell_;
    r.level = r.sd + 1;
    r.irr_count = d * d;
    r.irr_dims.assign(static_cast<size_t>(d) * d, ell_ / d);
    r.all_max_stable = true;
    r.in_lowest_stratum = true;
    return r;
  }

  std::vector<FiberPoint> default_grid(int, Rng&) const override {
    std::vector<FiberPoint> pts;
    for (int s = 0; s < ell_; ++s) pts.push_back({F_.eps_pow(s)});
    return pts;
  }

  std::vector<std::pair<std::string, long long>> point_params(const FiberPoint& pt) const override {
    return {{"s", exponent_of(pt[0])}};
  }

  FiberPoint point_from_params(
      const std::vector<std::pair<std::string, long long>>& params) const override {
    for (const auto& [k, v] : params)
      if (k == "s") return {F_.eps_pow(v)};
    throw ConfigError("central-ext-finite: parameter 's' required");
  }
};

// ---------------------------------------------------------------------------
// central_ext_infinite: the same extension over the free abelian group,
// fibered over a rank-2 torus times the cyclic factor.
// ---------------------------------------------------------------------------

class CentralExtInfinite final : public FiberFamily {
public:
  CentralExtInfinite(const PrimeField& F, int ell) {
    F_ = F;
    name_ = "central-ext-infinite";
    ell_ = ell;
    fiber_dim_ = ell * ell;
  }

  std::string parameter_space() const override {
    return "(u, v, s) with u, v nonzero; (x^ell, y^ell, c) = (u, v, eps^s)";
  }

  FiberPoint identity_point() const override { return {1, 1, 1}; }

  FiberPoint point_product(const FiberPoint& a, const FiberPoint& b) const override {
    return {F_.mul(a[0], b[0]), F_.mul(a[1], b[1]), F_.mul(a[2], b[2])};
  }

  FiberPoint point_antipode(const FiberPoint& a) const override {
    return {F_.inv(a[0]), F_.inv(a[1]), F_.inv(a[2])};
  }

  bool point_valid(const FiberPoint& a, std::string* why) const override {
    if (a.size() != 3 || a[0] == 0 || a[1] == 0) {
      if (why) *why = "u and v must be nonzero";
      return false;
    }
    if (a[2] == 0 || F_.pow(a[2], static_cast<std::uint64_t>(ell_)) != 1) {
      if (why) *why = "central cyclic value is not an ell-th root of unity";
      return false;
    }
    if (!ell_th_root(F_, a[0], ell_) || !ell_th_root(F_, a[1], ell_)) {
      if (why) *why = "no ell-th root for u or v in F_p";
      return false;
    }
    return true;
  }

  int exponent_of(Fe w) const {
    Fe cur = 1;
    for (int s = 0; s < ell_; ++s) {
      if (cur == w) return s;
      cur = F_.mul(cur, F_.epsilon());
    }
    throw ConfigError("central cyclic value is not a power of epsilon");
  }

  FiberBundle fiber(const FiberPoint& pt) const override {
    std::string why;
    if (!point_valid(pt, &why)) throw Error("central-ext-infinite: " + why);
    Fe u = pt[0], v = pt[1];
    int s = exponent_of(pt[2]);
    int n = fiber_dim_;
    auto idx = [&](int i, int j) { return i * ell_ + j; };

    std::vector<std::string> labels(n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j) labels[idx(i, j)] = monomial_label("x", i, "y", j);
    std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(n) * n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j)
        for (int k = 0; k < ell_; ++k)
          for (int m = 0; m < ell_; ++m) {
            Fe c = F_.eps_pow(static_cast<long long>(s) * j * k);
            if (i + k >= ell_) c = F_.mul(c, u);
            if (j + m >= ell_) c = F_.mul(c, v);
            prods[static_cast<size_t>(idx(i, j)) * n + idx(k, m)].emplace_back(
                idx((i + k) % ell_, (j + m) % ell_), c);
          }
    Vec unit(n, 0);
    unit[idx(0, 0)] = 1;

    FiberBundle B;
    B.point = pt;
    B.algebra = build_algebra(F_, std::move(labels), std::move(prods), std::move(unit));

    B.pres.gen_names = {"x", "y"};
    B.pres.invertible = {true, true};
    Vec xv(n, 0), yv(n, 0);
    if (ell_ == 1) {
      xv[0] = u;
      yv[0] = v;
    } else {
      xv[idx(1, 0)] = 1;
      yv[idx(0, 1)] = 1;
    }
    B.pres.gen_vectors = {xv, yv};
    B.pres.relations = {
        {"x^ell = u", Word::gen(0, ell_), Word::scalar(u)},
        {"y^ell = v", Word::gen(1, ell_), Word::scalar(v)},
        {"yx = c xy", Word::gen(1).times(F_, Word::gen(0)),
         Word::gen(0).times(F_, Word::gen(1)).scaled(F_, pt[2])},
    };

    B.hopf.coproduct = {{{Word::gen(0), Word::gen(0)}}, {{Word::gen(1), Word::gen(1)}}};
    B.hopf.counit = {1, 1};
    B.hopf.antipode = {Word::gen(0, -1), Word::gen(1, -1)};
    B.hopf.central_labels = {"x^ell", "y^ell", "c"};

    int d = s == 0 ? ell_ : std::gcd(ell_, s);
    int n0 = ell_ / d;
    Fe ru = *ell_th_root(F_, u, ell_);
    Fe rv = *ell_th_root(F_, v, ell_);
    B.seed.point = pt;
    B.seed.dim = n0;
    std::vector<Fe> diag(n0);
    for (int t = 0; t < n0; ++t) diag[t] = F_.mul(rv, F_.eps_pow(static_cast<long long>(t) * s));
    B.seed.gen = {mat_scale(F_, ru, cycle_matrix(n0)), diag_matrix(diag)};
    return B;
  }

  std::vector<Character> fiber_characters(const FiberPoint& pt) const override {
    auto ru = ell_th_root(F_, pt[0], ell_);
    auto rv = ell_th_root(F_, pt[1], ell_);
    if (!ru || !rv) return {};  // no algebra map can hit a missing root
    FiberBundle B = fiber(pt);
    std::vector<Fe> mu = roots_of_unity(F_, ell_);
    std::vector<Fe> xs, ys;
    for (Fe w : mu) {
      xs.push_back(F_.mul(*ru, w));
      ys.push_back(F_.mul(*rv, w));
    }
    return enumerate_characters(F_, B.pres, {xs, ys});
  }

  std::vector<std::vector<Fe>> winding_rescales(Side) const override {
    std::vector<Fe> P = power_subgroup(F_, ell_);
    std::vector<std::vector<Fe>> out;
    out.reserve(P.size() * P.size());
    for (Fe a : P)
      for (Fe b : P) out.push_back({a, b, 1});
    return out;
  }

  std::vector<Fe> central_rescale(const Character& chi, Side) const override {
    return {F_.pow(chi.values[0], static_cast<std::uint64_t>(ell_)),
            F_.pow(chi.values[1], static_cast<std::uint64_t>(ell_)), 1};
  }

  ExpectedReport expected_report(const FiberPoint& pt) const override {
    int s = exponent_of(pt[2]);
    int d = s == 0 ? ell_ : std::gcd(ell_, s);
    ExpectedReport r;
    r.sd = ell_ * ell_;
    r.level = r.sd + 1;
    r.irr_count = d * d;
    r.irr_dims.assign(static_cast<size_t>(d) * d, ell_ / d);
    r.all_max_stable = true;
    r.in_lowest_stratum = true;
    return r;
  }

  std::vector<FiberPoint> default_grid(int samples, Rng& rng) const override {
    std::vector<Fe> vals{1};
    for (int i = 0; i < samples; ++i) {
      Fe t = rng.nonzero_elt(F_);
      vals.push_back(F_.pow(t, static_cast<std::uint64_t>(ell_)));
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<FiberPoint> pts;
    for (Fe u : vals)
      for (Fe v : vals)
        for (int s = 0; s < ell_; ++s) pts.push_back({u, v, F_.eps_pow(s)});
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  std::vector<std::pair<std::string, long long>> point_params(const FiberPoint& pt) const override {
    return {{"u", static_cast<long long>(pt[0])},
            {"v", static_cast<long long>(pt[1])},
            {"s", exponent_of(pt[2])}};
  }

  FiberPoint point_from_params(
      const std::vector<std::pair<std::string, long long>>& params) const override {
    std::optional<long long> u, v, s;
    for (const auto& [k, val] : params) {
      if (k == "u") u = val;
      if (k == "v") v = val;
      if (k == "s") s = val;
    }
    if (!u || !v || !s)
      throw ConfigError("central-ext-infinite: parameters u, v, s required");
    return {F_.from_int(*u), F_.from_int(*v), F_.eps_pow(*s)};
  }
};

// ---------------------------------------------------------------------------
// quantum_borel_rank1: the rank-one big quantum Borel at an odd root of
// unity, fibered over (K^ell, E^ell).
// ---------------------------------------------------------------------------

class QuantumBorelRank1 final : public FiberFamily {
public:
  QuantumBorelRank1(const PrimeField& F, int ell) {
    F_ = F;
    name_ = "quantum-borel-rank1";
    ell_ = ell;
    fiber_dim_ = ell * ell;
  }

  std::string parameter_space() const override {
    return "(y, x) with y nonzero; (K^ell, E^ell) = (y, x)";
  }

  FiberPoint identity_point() const override { return {1, 0}; }

  FiberPoint point_product(const FiberPoint& a, const FiberPoint& b) const override {
    // Delta(E^ell) = E^ell (x) 1 + K^ell (x) E^ell
    return {F_.mul(a[0], b[0]), F_.add(a[1], F_.mul(a[0], b[1]))};
  }

  FiberPoint point_antipode(const FiberPoint& a) const override {
    Fe yi = F_.inv(a[0]);
    return {yi, F_.neg(F_.mul(yi, a[1]))};
  }

  bool point_valid(const FiberPoint& a, std::string* why) const override {
    if (a.size() != 2 || a[0] == 0) {
      if (why) *why = "K^ell value must be nonzero";
      return false;
    }
    if (!ell_th_root(F_, a[0], ell_) || !ell_th_root(F_, a[1], ell_)) {
      if (why) *why = "no ell-th root for a central value in F_p";
      return false;
    }
    return true;
  }

  FiberBundle fiber(const FiberPoint& pt) const override {
    std::string why;
    if (!point_valid(pt, &why)) throw Error("quantum-borel-rank1: " + why);
    Fe y = pt[0], x = pt[1];
    int n = fiber_dim_;
    auto idx = [&](int i, int j) { return i * ell_ + j; };  // E^i K^j

    std::vector<std::string> labels(n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j) labels[idx(i, j)] = monomial_label("E", i, "K", j);
    std::vector<std::vector<std::pair<int, Fe>>> prods(static_cast<size_t>(n) * n);
    for (int i = 0; i < ell_; ++i)
      for (int j = 0; j < ell_; ++j)
        for (int k = 0; k < ell_; ++k)
          for (int m = 0; m < ell_; ++m) {
            // (E^i K^j)(E^k K^m) = eps^{2jk} E^{i+k} K^{j+m}
            Fe c = F_.eps_pow(2ll * j * k);
            if (i + k >= ell_) c = F_.mul(c, x);
            if (j + m >= ell_) c = F_.mul(c, y);
            if (c != 0)
              prods[static_cast<size_t>(idx(i, j)) * n + idx(k, m)].emplace_back(
                  idx((i + k) % ell_, (j + m) % ell_), c);
          }
    Vec unit(n, 0);
    unit[idx(0, 0)] = 1;

    FiberBundle B;
    B.point = pt;
    B.algebra = build_algebra(F_, std::move(labels), std::move(prods), std::move(unit));

    B.pres.gen_names = {"E", "K"};
    B.pres.invertible = {x != 0, true};
    Vec ev(n, 0), kv(n, 0);
    ev[idx(1, 0)] = 1;
    kv[idx(0, 1)] = 1;
    B.pres.gen_vectors = {ev, kv};
    B.pres.relations = {
        {"K^ell = y", Word::gen(1, ell_), Word::scalar(y)},
        {"E^ell = x", Word::gen(0, ell_), Word::scalar(x)},
        {"KE = eps^2 EK", Word::gen(1).times(F_, Word::gen(0)),
         Word::gen(0).times(F_, Word::gen(1)).scaled(F_, F_.eps_pow(2))},
    };

    B.hopf.coproduct = {
        {{Word::gen(0), Word::one()}, {Word::gen(1), Word::gen(0)}},  // Delta E = E(x)1 + K(x)E
        {{Word::gen(1), Word::gen(1)}},                               // Delta K = K(x)K
    };
    B.hopf.counit = {0, 1};
    B.hopf.antipode = {Word{F_.neg(1), {{1, -1}, {0, 1}}}, Word::gen(1, -1)};
    B.hopf.central_labels = {"K^ell", "E^ell"};

    Fe ry = *ell_th_root(F_, y, ell_);
    B.seed.point = pt;
    if (x == 0) {
      B.seed.dim = 1;
      Mat e(1, 1), k(1, 1);
      k.at(0, 0) = ry;
      B.seed.gen = {e, k};
    } else {
      Fe rx = *ell_th_root(F_, x, ell_);
      B.seed.dim = ell_;
      std::vector<Fe> diag(ell_);
      for (int t = 0; t < ell_; ++t) diag[t] = F_.mul(ry, F_.eps_pow(2ll * t));
      B.seed.gen = {mat_scale(F_, rx, cycle_matrix(ell_)), diag_matrix(diag)};
    }
    return B;
  }

  std::vector<Character> fiber_characters(const FiberPoint& pt) const override {
    auto ry = ell_th_root(F_, pt[0], ell_);
    if (!ry) return {};
    if (!point_valid(pt, nullptr)) return {};  // x != 0 without a root: no characters either
    FiberBundle B = fiber(pt);
    std::vector<Fe> ks;
    for (Fe w : roots_of_unity(F_, ell_)) ks.push_back(F_.mul(*ry, w));
    return enumerate_characters(F_, B.pres, {{0}, ks});
  }

  std::vector<std::vector<Fe>> winding_rescales(Side side) const override {
    std::vector<std::vector<Fe>> out;
    for (Fe a : power_subgroup(F_, ell_))
      out.push_back(side == Side::left ? std::vector<Fe>{a, a} : std::vector<Fe>{a, 1});
    return out;
  }

  std::vector<Fe> central_rescale(const Character& chi, Side side) const override {
    Fe kl = F_.pow(chi.values[1], static_cast<std::uint64_t>(ell_));
    return side == Side::left ? std::vector<Fe>{kl, kl} : std::vector<Fe>{kl, 1};
  }

  ExpectedReport expected_report(const FiberPoint& pt) const override {
    ExpectedReport r;
    if (pt[1] == 0) {
      r.sd = ell_;
      r.level = ell_ + 1;
      r.irr_count = ell_;
      r.irr_dims.assign(static_cast<size_t>(ell_), 1);
      r.all_max_stable = true;
      r.in_lowest_stratum = true;
    } else {
      r.sd = ell_ * ell_;
      r.level = r.sd + 1;
      r.irr_count = 1;
      r.irr_dims = {ell_};
      r.all_max_stable = false;
      r.in_lowest_stratum = false;
    }
    return r;
  }

  std::vector<FiberPoint> default_grid(int samples, Rng& rng) const override {
    auto sample_powers = [&](bool with_zero) {
      std::vector<Fe> vals{1};
      if (with_zero) vals.push_back(0);
      for (int i = 0; i < samples; ++i) {
        Fe t = rng.nonzero_elt(F_);
        vals.push_back(F_.pow(t, static_cast<std::uint64_t>(ell_)));
      }
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      return vals;
    };
    std::vector<Fe> ys = sample_powers(false);
    std::vector<Fe> xs = sample_powers(true);
    std::vector<FiberPoint> pts;
    for (Fe y : ys)
      for (Fe x : xs) pts.push_back({y, x});
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  std::vector<std::pair<std::string, long long>> point_params(const FiberPoint& pt) const override {
    return {{"y", static_cast<long long>(pt[0])}, {"x", static_cast<long long>(pt[1])}};
  }

  FiberPoint point_from_params(
      const std::vector<std::pair<std::string, long long>>& params) const override {
    std::optional<long long> y, x;
    for (const auto& [k, val] : params) {
      if (k == "y") y = val;
      if (k == "x") x = val;
    }
    if (!y || !x) throw ConfigError("quantum-borel-rank1: parameters y, x required");
    return {F_.from_int(*y), F_.from_int(*x)};
  }
};

}  // namespace

std::vector<std::string> family_names() {
  return {"central-ext-finite", "central-ext-infinite", "quantum-borel-rank1"};
}

std::unique_ptr<FiberFamily> make_family(const std::string& name, int ell,
                                         std::optional<std::uint64_t> prime, std::uint64_t seed) {
  if (ell < 1) throw ConfigError("ell must be positive");
  if (name == "quantum-borel-rank1" && (ell < 3 || ell % 2 == 0))
    throw ConfigError("quantum-borel-rank1 needs odd ell >= 3");
  std::uint64_t fiber_dim = static_cast<std::uint64_t>(ell) * ell;
  std::uint64_t p = prime ? *prime : find_prime(ell, fiber_dim * fiber_dim);
  if (p <= fiber_dim)
    throw ConfigError("prime " + std::to_string(p) + " must exceed the fiber dimension " +
                      std::to_string(fiber_dim));
  PrimeField F(p, static_cast<std::uint64_t>(ell), seed);
  if (name == "central-ext-finite") return std::make_unique<CentralExtFinite>(F, ell);
  if (name == "central-ext-infinite") return std::make_unique<CentralExtInfinite>(F, ell);
  if (name == "quantum-borel-rank1") return std::make_unique<QuantumBorelRank1>(F, ell);
  throw ConfigError("unknown family '" + name + "'");
}

CocycleTable quantum_torus_cocycle(const PrimeField& F, int ell) {
  std::vector<Fe> mu = roots_of_unity(F, ell);
  int n = ell * ell;
  CocycleTable T;
  T.element_names.resize(static_cast<size_t>(n));
  T.mult.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  T.gamma.assign(static_cast<size_t>(n), std::vector<Fe>(static_cast<size_t>(n), 1));
  auto idx = [&](int i, int j) { return i * ell + j; };
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j) {
      T.element_names[static_cast<size_t>(idx(i, j))] = monomial_label("a", i, "b", j);
      for (int k = 0; k < ell; ++k)
        for (int m = 0; m < ell; ++m) {
          T.mult[static_cast<size_t>(idx(i, j))][static_cast<size_t>(idx(k, m))] =
              idx((i + k) % ell, (j + m) % ell);
          T.gamma[static_cast<size_t>(idx(i, j))][static_cast<size_t>(idx(k, m))] =
              mu[static_cast<size_t>(j * k % ell)];
        }
    }
  return T;
}

StructureAlgebra quantum_torus(const PrimeField& F, int ell) {
  return twisted_group_algebra(F, quantum_torus_cocycle(F, ell));
}

}  // namespace hopf
