#include "fgct/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

#include "fgct/error.hpp"

namespace fgct {

namespace nt {

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return a == 0 || b == 0 ? 0 : std::lcm(a, b); }

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<int> prime_divisors(long n) {
  std::vector<int> out;
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int euler_phi(int n) {
  int result = n;
  for (int p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<int> units(int n) {
  if (n == 1) return {0};
  std::vector<int> out;
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

}  // namespace nt

namespace {

using IntVec = std::vector<long>;

// Power-basis data for Q(zeta_n): the cyclotomic polynomial and the reduction
// of every monomial x^i (0 <= i < n) modulo it.
struct FieldTables {
  int n = 1;
  int phi = 1;
  IntVec cyclo;                 // monic, degree phi
  std::vector<IntVec> monomial;  // monomial[i] has length phi
};

// Data for recognising elements of Q(zeta_d) inside Q(zeta_m) when m = p*d
// with p prime not dividing d.
struct Projection {
  std::vector<int> pivots;                 // phi(d) rows of the embedding
  std::vector<std::vector<Rational>> sinv;  // inverse of the pivot block
  std::vector<IntVec> embed;               // embed[j] = image of zeta_d^j, length phi(m)
};

IntVec poly_divide_exact(IntVec num, const IntVec& den) {
  // both little-endian, den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  IntVec q(nn - dn + 1, 0);
  for (int i = nn - dn; i >= 0; --i) {
    long c = num[i + dn];
    q[i] = c;
    if (c != 0)
      for (int j = 0; j <= dn; ++j) num[i + j] -= c * den[j];
  }
  return q;
}

struct Tables {
  std::map<int, std::unique_ptr<FieldTables>> fields;
  std::map<std::pair<int, int>, std::unique_ptr<Projection>> projections;
  std::map<int, IntVec> cyclotomic_polys;

  const IntVec& cyclotomic_poly(int n) {
    auto it = cyclotomic_polys.find(n);
    if (it != cyclotomic_polys.end()) return it->second;
    IntVec num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) num = poly_divide_exact(num, cyclotomic_poly(d));
    return cyclotomic_polys.emplace(n, std::move(num)).first->second;
  }

  const FieldTables& field(int n) {
    auto it = fields.find(n);
    if (it != fields.end()) return *it->second;
    auto f = std::make_unique<FieldTables>();
    f->n = n;
    f->cyclo = cyclotomic_poly(n);
    f->phi = static_cast<int>(f->cyclo.size()) - 1;
    const int phi = f->phi;
    f->monomial.resize(n);
    IntVec cur(phi, 0);
    cur[0] = 1;
    for (int i = 0; i < n; ++i) {
      f->monomial[i] = cur;
      // multiply by x and reduce the overflowing top coefficient
      long top = cur[phi - 1];
      for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (top != 0)
        for (int j = 0; j < phi; ++j) cur[j] -= top * f->cyclo[j];
    }
    return *fields.emplace(n, std::move(f)).first->second;
  }

  const Projection& projection(int m, int d) {
    auto key = std::make_pair(m, d);
    auto it = projections.find(key);
    if (it != projections.end()) return *it->second;
    const FieldTables& big = field(m);
    const FieldTables& small = field(d);
    const int step = m / d;
    auto pr = std::make_unique<Projection>();
    for (int j = 0; j < small.phi; ++j) pr->embed.push_back(big.monomial[(j * step) % m]);

    // pick independent rows by elimination on the transpose
    const int rows = big.phi;
    const int cols = small.phi;
    std::vector<std::vector<Rational>> work(rows, std::vector<Rational>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) work[r][c] = pr->embed[c][r];
    std::vector<std::vector<Rational>> basis;  // echelonized accepted rows
    std::vector<int> lead;
    for (int r = 0; r < rows && static_cast<int>(pr->pivots.size()) < cols; ++r) {
      std::vector<Rational> v = work[r];
      for (size_t b = 0; b < basis.size(); ++b) {
        if (v[lead[b]] != 0) {
          Rational f = v[lead[b]];
          for (int c = 0; c < cols; ++c) v[c] -= f * basis[b][c];
        }
      }
      int l = -1;
      for (int c = 0; c < cols; ++c)
        if (v[c] != 0) {
          l = c;
          break;
        }
      if (l < 0) continue;
      Rational inv = 1 / v[l];
      for (auto& x : v) x *= inv;
      basis.push_back(std::move(v));
      lead.push_back(l);
      pr->pivots.push_back(r);
    }

    // invert the square pivot block
    std::vector<std::vector<Rational>> a(cols, std::vector<Rational>(2 * cols));
    for (int i = 0; i < cols; ++i) {
      for (int j = 0; j < cols; ++j) a[i][j] = work[pr->pivots[i]][j];
      a[i][cols + i] = 1;
    }
    for (int c = 0; c < cols; ++c) {
      int p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (int r = 0; r < cols; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c];
        for (int k = 0; k < 2 * cols; ++k) a[r][k] -= f * a[c][k];
      }
    }
    pr->sinv.assign(cols, std::vector<Rational>(cols));
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < cols; ++j) pr->sinv[i][j] = a[i][cols + j];
    return *projections.emplace(key, std::move(pr)).first->second;
  }
};

Tables& tables() {
  thread_local Tables t;
  return t;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Accumulate coefficient * (x^e mod Phi_m) into out.
void add_monomial(std::vector<Rational>& out, const FieldTables& f, long e, const Rational& coeff) {
  if (coeff == 0) return;
  const IntVec& mono = f.monomial[nt::mod(e, f.n)];
  for (int j = 0; j < f.phi; ++j)
    if (mono[j] != 0) out[j] += coeff * mono[j];
}

}  // namespace

Cyclotomic make_cyclotomic(int n, std::vector<Rational> c) {
  Cyclotomic x(n, std::move(c));
  x.canonicalize();
  return x;
}

void Cyclotomic::canonicalize() {
  for (auto& q : c_) q.canonicalize();
  for (;;) {
    if (all_zero(c_)) {
      n_ = 1;
      c_.assign(1, Rational(0));
      return;
    }
    if (n_ == 1) return;
    bool reduced = false;
    for (int p : nt::prime_divisors(n_)) {
      const int d = n_ / p;
      if (d % p == 0) {
        // Phi_n(x) = Phi_d(x^p): membership means only exponents divisible by p occur
        bool member = true;
        for (size_t i = 0; i < c_.size() && member; ++i)
          if (i % p != 0 && c_[i] != 0) member = false;
        if (!member) continue;
        std::vector<Rational> next(c_.size() / p);
        for (size_t q = 0; q < next.size(); ++q) next[q] = c_[q * p];
        c_ = std::move(next);
        n_ = d;
        reduced = true;
        break;
      }
      const Projection& pr = tables().projection(n_, d);
      const size_t k = pr.pivots.size();
      std::vector<Rational> y(k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          if (pr.sinv[i][j] != 0) y[i] += pr.sinv[i][j] * c_[pr.pivots[j]];
      bool member = true;
      for (size_t r = 0; r < c_.size() && member; ++r) {
        Rational acc = 0;
        for (size_t j = 0; j < k; ++j)
          if (pr.embed[j][r] != 0) acc += y[j] * pr.embed[j][r];
        if (acc != c_[r]) member = false;
      }
      if (!member) continue;
      c_ = std::move(y);
      n_ = d;
      reduced = true;
      break;
    }
    if (!reduced) return;
  }
}

std::vector<Rational> Cyclotomic::lift(int m) const {
  const FieldTables& f = tables().field(m);
  std::vector<Rational> out(f.phi);
  const int step = m / n_;
  for (size_t j = 0; j < c_.size(); ++j) add_monomial(out, f, static_cast<long>(j) * step, c_[j]);
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  require(n >= 1, Errc::DivisionByZero, "root of unity of order < 1");
  if (n == 1) return Cyclotomic(1L);
  const FieldTables& f = tables().field(n);
  std::vector<Rational> c(f.phi);
  add_monomial(c, f, k, Rational(1));
  return make_cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_exponents(int n, std::span<const Rational> coeffs) {
  if (n == 1) {
    Rational s = 0;
    for (const auto& q : coeffs) s += q;
    return Cyclotomic(s);
  }
  const FieldTables& f = tables().field(n);
  std::vector<Rational> c(f.phi);
  for (size_t k = 0; k < coeffs.size(); ++k) add_monomial(c, f, static_cast<long>(k), coeffs[k]);
  return make_cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_integer() const { return n_ == 1 && c_[0].get_den() == 1; }

const Rational& Cyclotomic::rational() const {
  require(n_ == 1, Errc::TheoremViolation, "rational() on irrational value " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (n_ == rhs.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    if (n_ != 1) canonicalize();
    return *this;
  }
  const int m = static_cast<int>(nt::lcm(n_, rhs.n_));
  std::vector<Rational> a = lift(m);
  std::vector<Rational> b = rhs.lift(m);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  n_ = m;
  c_ = std::move(a);
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.n_ == 1 || n_ == 1) {
    const Rational s = rhs.n_ == 1 ? rhs.c_[0] : c_[0];
    if (rhs.n_ != 1) *this = rhs;
    if (s == 0) return *this = Cyclotomic();
    for (auto& q : c_) q *= s;
    return *this;
  }
  const int m = static_cast<int>(nt::lcm(n_, rhs.n_));
  std::vector<Rational> a = n_ == m ? c_ : lift(m);
  std::vector<Rational> b = rhs.n_ == m ? rhs.c_ : rhs.lift(m);
  const FieldTables& f = tables().field(m);
  std::vector<Rational> prod(2 * f.phi - 1);
  for (int i = 0; i < f.phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f.phi; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + f.phi);
  for (int t = f.phi; t < 2 * f.phi - 1; ++t) add_monomial(out, f, t, prod[t]);
  n_ = m;
  c_ = std::move(out);
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const FieldTables& f = tables().field(n_);
  const int k = f.phi;
  // columns: coordinates of x * zeta^j; solve M y = e_0
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> col(k);
    for (int i = 0; i < k; ++i) add_monomial(col, f, i + j, c_[i]);
    for (int r = 0; r < k; ++r) a[r][j] = col[r];
  }
  a[0][k] = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational fct = a[r][c];
      for (int t = c; t <= k; ++t) a[r][t] -= fct * a[c][t];
    }
  }
  std::vector<Rational> y(k);
  for (int r = 0; r < k; ++r) y[r] = a[r][k];
  return make_cyclotomic(n_, std::move(y));
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  require(nt::gcd(nt::mod(k, n_), n_) == 1, Errc::NotCoprime,
          "Galois element " + std::to_string(k) + " not coprime to conductor " + std::to_string(n_));
  const FieldTables& f = tables().field(n_);
  std::vector<Rational> out(f.phi);
  for (int j = 0; j < f.phi; ++j) add_monomial(out, f, static_cast<long>(j) * k, c_[j]);
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

int Cyclotomic::root_of_unity_order(long* exponent) const {
  const int big = static_cast<int>(nt::lcm(2, n_));
  for (int k = 0; k < big; ++k) {
    if (root_of_unity(big, k) == *this) {
      const int g = static_cast<int>(nt::gcd(k, big));
      if (exponent) *exponent = k / g;
      return big / g;
    }
  }
  return 0;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (n_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "E(" + std::to_string(n_) + ")"
                                             : "E(" + std::to_string(n_) + ")^" + std::to_string(k));
    Rational mag = abs(q);
    if (q < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

Cyclotomic galois_apply(const Cyclotomic& x, long k) { return x.galois(k); }
bool is_rational(const Cyclotomic& x) { return x.is_rational(); }

// ---------------------------------------------------------------------------
// number fields

namespace {

// stabilizer of `field` lifted to residues mod m (field.conductor | m)
std::vector<int> lifted_stabilizer(const NumberFieldDescriptor& field, int m) {
  std::vector<int> out;
  for (int k : nt::units(m))
    if (std::binary_search(field.stabilizer.begin(), field.stabilizer.end(),
                           static_cast<int>(nt::mod(k, field.conductor))))
      out.push_back(k);
  return out;
}

NumberFieldDescriptor canonical_descriptor(int big, const std::vector<int>& stab) {
  for (int n = 1; n <= big; ++n) {
    if (big % n != 0) continue;
    bool contained = true;
    for (int k : nt::units(big)) {
      if (nt::mod(k, n) == nt::mod(1, n) && !std::binary_search(stab.begin(), stab.end(), k)) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;
    NumberFieldDescriptor d;
    d.conductor = n;
    d.stabilizer.clear();
    for (int k : stab) d.stabilizer.push_back(static_cast<int>(nt::mod(k, n)));
    std::sort(d.stabilizer.begin(), d.stabilizer.end());
    d.stabilizer.erase(std::unique(d.stabilizer.begin(), d.stabilizer.end()), d.stabilizer.end());
    return d;
  }
  return {};
}

}  // namespace

int NumberFieldDescriptor::degree() const {
  return nt::euler_phi(conductor) / static_cast<int>(stabilizer.size());
}

NumberFieldDescriptor rationals_field() { return {}; }

NumberFieldDescriptor cyclotomic_field(int n) {
  return field_of_values(std::vector<Cyclotomic>{Cyclotomic::root_of_unity(n, 1)});
}

NumberFieldDescriptor field_of_values(std::span<const Cyclotomic> values) {
  int big = 1;
  for (const auto& v : values) big = static_cast<int>(nt::lcm(big, v.conductor()));
  std::vector<int> stab;
  for (int k : nt::units(big)) {
    bool fixes = true;
    for (const auto& v : values) {
      if (v.conductor() == 1) continue;
      if (v.galois(k) != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) stab.push_back(k);
  }
  return canonical_descriptor(big, stab);
}

bool field_contains(const NumberFieldDescriptor& outer, const NumberFieldDescriptor& inner) {
  const int m = static_cast<int>(nt::lcm(outer.conductor, inner.conductor));
  auto so = lifted_stabilizer(outer, m);
  auto si = lifted_stabilizer(inner, m);
  return std::includes(si.begin(), si.end(), so.begin(), so.end());
}

bool field_contains(const NumberFieldDescriptor& field, const Cyclotomic& x) {
  const int m = static_cast<int>(nt::lcm(field.conductor, x.conductor()));
  for (int k : lifted_stabilizer(field, m))
    if (x.galois(k) != x) return false;
  return true;
}

NumberFieldDescriptor compositum(const NumberFieldDescriptor& a, const NumberFieldDescriptor& b) {
  const int m = static_cast<int>(nt::lcm(a.conductor, b.conductor));
  auto sa = lifted_stabilizer(a, m);
  auto sb = lifted_stabilizer(b, m);
  std::vector<int> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  return canonical_descriptor(m, both);
}

bool contains_root_of_unity(const NumberFieldDescriptor& field, int e) {
  return field_contains(field, Cyclotomic::root_of_unity(e, 1));
}

bool galois_fixes(const NumberFieldDescriptor& field, long k) {
  return std::binary_search(field.stabilizer.begin(), field.stabilizer.end(),
                            static_cast<int>(nt::mod(k, field.conductor)));
}

}  // namespace fgct
