#include "fgct/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fgct/error.hpp"

namespace fgct {

// --- classes --------------------------------------------------------------

int ClassData::power_class(int c, long k) const {
  const FiniteGroup& g = group.group();
  return class_of[g.power(reps[c], k)];
}

static std::shared_ptr<const ClassData> class_data_ptr(const Subgroup& h) {
  SubgroupData& d = h.data();
  std::call_once(d.classes_once, [&] {
    const FiniteGroup& g = h.group();
    auto cd = std::make_shared<ClassData>();
    cd->group = h;
    std::vector<int> raw_of(g.order(), -1);
    std::vector<std::vector<int>> raw;
    const auto& gens = h.generators();
    for (int x : h.elements()) {
      if (raw_of[x] >= 0) continue;
      const int id = static_cast<int>(raw.size());
      std::vector<int> orbit{x};
      raw_of[x] = id;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (int s : gens) {
          int y = g.conj(orbit[i], s);
          if (raw_of[y] < 0) {
            raw_of[y] = id;
            orbit.push_back(y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      raw.push_back(std::move(orbit));
    }
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    const int e = g.identity();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      bool ia = raw[a][0] == e, ib = raw[b][0] == e;
      if (ia != ib) return ia;
      if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
      return raw[a][0] < raw[b][0];
    });
    cd->class_of.assign(g.order(), -1);
    for (size_t c = 0; c < order.size(); ++c) {
      cd->classes.push_back(std::move(raw[order[c]]));
      for (int x : cd->classes.back()) cd->class_of[x] = static_cast<int>(c);
    }
    for (const auto& cls : cd->classes) {
      cd->reps.push_back(cls[0]);
      cd->centralizer_orders.push_back(h.order() / static_cast<int>(cls.size()));
      cd->rep_orders.push_back(g.element_order(cls[0]));
    }
    for (int r : cd->reps) cd->inverse_class.push_back(cd->class_of[g.inv(r)]);
    d.classes = std::move(cd);
  });
  return d.classes;
}

const ClassData& class_data(const Subgroup& h) { return *class_data_ptr(h); }

// --- class functions ------------------------------------------------------

ClassFunction::ClassFunction(Subgroup h, std::vector<Cyclotomic> values)
    : h_(std::move(h)), cd_(class_data_ptr(h_)), v_(std::move(values)) {
  require(static_cast<int>(v_.size()) == cd_->count(), Errc::HandleMismatch,
          "class function has the wrong number of values");
}

ClassFunction ClassFunction::constant(const Subgroup& h, const Cyclotomic& c) {
  return ClassFunction(h, std::vector<Cyclotomic>(class_data(h).count(), c));
}

const Cyclotomic& ClassFunction::operator()(int x) const {
  int c = cd_->class_of[x];
  require(c >= 0, Errc::HandleMismatch, "element " + std::to_string(x) + " outside the domain");
  return v_[c];
}

long ClassFunction::degree_int() const {
  require(v_[0].is_integer(), Errc::NotGenuineCharacter, "degree is not an integer");
  return v_[0].rational().get_num().get_si();
}

bool ClassFunction::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

static void same_domain(const ClassFunction& a, const ClassFunction& b) {
  require(a.group() == b.group(), Errc::HandleMismatch, "class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  same_domain(*this, o);
  for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  same_domain(*this, o);
  for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  same_domain(*this, o);
  for (size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& c) {
  for (auto& v : v_) v *= c;
  return *this;
}

ClassFunction ClassFunction::galois(long k) const {
  std::vector<Cyclotomic> out;
  out.reserve(v_.size());
  for (const auto& v : v_) out.push_back(v.galois(k));
  return ClassFunction(h_, std::move(out));
}

std::strong_ordering operator<=>(const ClassFunction& a, const ClassFunction& b) {
  if (a.h_ != b.h_) return a.h_ <=> b.h_;
  return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
}

// --- modular helpers ------------------------------------------------------

namespace {

using i64 = long long;

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

i64 primitive_root(i64 p) {
  auto qs = nt::prime_divisors(p - 1);
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (int q : qs)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

using Mat = std::vector<std::vector<i64>>;

// Characteristic polynomial (low degree first) via Hessenberg reduction.
std::vector<i64> charpoly(Mat h, i64 p) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i > m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    i64 inv = invmod(h[m][m - 1], p);
    for (int i2 = m + 1; i2 < n; ++i2) {
      i64 u = h[i2][m - 1] * inv % p;
      if (u == 0) continue;
      for (int c = 0; c < n; ++c) h[i2][c] = ((h[i2][c] - u * h[m][c]) % p + p) % p;
      for (int r = 0; r < n; ++r) h[r][m] = (h[r][m] + u * h[r][i2]) % p;
    }
  }
  std::vector<std::vector<i64>> P(n + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<i64> cur(m + 1, 0);
    // (x - h[m-1][m-1]) * P[m-1]
    for (int k = 0; k < m; ++k) {
      cur[k + 1] = (cur[k + 1] + P[m - 1][k]) % p;
      cur[k] = ((cur[k] - h[m - 1][m - 1] * P[m - 1][k]) % p + p) % p;
    }
    i64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % p;
      i64 f = t * h[m - i - 1][m - 1] % p;
      if (f == 0) continue;
      for (size_t k = 0; k < P[m - i - 1].size(); ++k)
        cur[k] = ((cur[k] - f * P[m - i - 1][k]) % p + p) % p;
    }
    P[m] = std::move(cur);
  }
  return P[n];
}

// Null space basis of a square matrix mod p (vectors as rows).
Mat nullspace(Mat a, i64 p) {
  const int n = static_cast<int>(a.size());
  const int cols = n == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivcol;
  int row = 0;
  for (int c = 0; c < cols && row < n; ++c) {
    int r = row;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(a[r], a[row]);
    i64 inv = invmod(a[row][c], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (int r2 = 0; r2 < n; ++r2) {
      if (r2 == row || a[r2][c] == 0) continue;
      i64 f = a[r2][c];
      for (int k = 0; k < cols; ++k) a[r2][k] = ((a[r2][k] - f * a[row][k]) % p + p) % p;
    }
    pivcol.push_back(c);
    ++row;
  }
  Mat out;
  std::vector<char> is_piv(cols, 0);
  for (int c : pivcol) is_piv[c] = 1;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = (p - a[r][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Row-reduce a list of vectors; returns the reduced basis and its pivots.
struct Space {
  Mat rows;
  std::vector<int> pivots;
};

Space reduce_space(Mat v, i64 p) {
  Space s;
  const int n = static_cast<int>(v.size());
  const int cols = n == 0 ? 0 : static_cast<int>(v[0].size());
  int row = 0;
  for (int c = 0; c < cols && row < n; ++c) {
    int r = row;
    while (r < n && v[r][c] == 0) ++r;
    if (r == n) continue;
    std::swap(v[r], v[row]);
    i64 inv = invmod(v[row][c], p);
    for (auto& x : v[row]) x = x * inv % p;
    for (int r2 = 0; r2 < n; ++r2) {
      if (r2 == row || v[r2][c] == 0) continue;
      i64 f = v[r2][c];
      for (int k = 0; k < cols; ++k) v[r2][k] = ((v[r2][k] - f * v[row][k]) % p + p) % p;
    }
    s.pivots.push_back(c);
    ++row;
  }
  v.resize(row);
  s.rows = std::move(v);
  return s;
}

// Splits an invariant subspace into eigenspaces of m.
std::vector<Space> split(const Space& s, const Mat& m, i64 p) {
  const int d = static_cast<int>(s.rows.size());
  const int r = static_cast<int>(m.size());
  // A[k][i] = (M v_i)[pivot_k], with (M v)[l] = sum_k M[l][k] v[k]
  Mat mv(d, std::vector<i64>(r, 0));
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < r; ++l) {
      i64 acc = 0;
      for (int k = 0; k < r; ++k)
        if (s.rows[i][k] != 0 && m[l][k] != 0) acc = (acc + m[l][k] * s.rows[i][k]) % p;
      mv[i][l] = acc;
    }
  Mat a(d, std::vector<i64>(d));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) a[k][i] = mv[i][s.pivots[k]];
  auto cp = charpoly(a, p);
  std::vector<Space> out;
  for (i64 lam = 0; lam < p; ++lam) {
    i64 val = 0;
    for (size_t k = cp.size(); k-- > 0;) val = (val * lam + cp[k]) % p;
    if (val != 0) continue;
    Mat b = a;
    for (int i = 0; i < d; ++i) b[i][i] = ((b[i][i] - lam) % p + p) % p;
    Mat ns = nullspace(b, p);
    Mat vecs;
    for (const auto& c : ns) {
      std::vector<i64> v(r, 0);
      for (int i = 0; i < d; ++i)
        if (c[i] != 0)
          for (int k = 0; k < r; ++k) v[k] = (v[k] + c[i] * s.rows[i][k]) % p;
      vecs.push_back(std::move(v));
    }
    out.push_back(reduce_space(std::move(vecs), p));
  }
  int total = 0;
  for (const auto& sp : out) total += static_cast<int>(sp.rows.size());
  if (total != d) fail(Errc::TheoremViolation, "class matrix is not diagonalizable over GF(p)");
  return out;
}

// Characters of an abelian group by extending along generators.
std::vector<ClassFunction> abelian_table(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  const int e = subgroup_exponent(h);
  const auto& gens = h.generators();
  struct Partial {
    std::vector<int> elems;
    std::vector<int> log;  // ambient-indexed, -1 undefined
  };
  std::vector<Partial> level{{{g.identity()}, std::vector<int>(g.order(), -1)}};
  level[0].log[g.identity()] = 0;
  for (int s : gens) {
    std::vector<Partial> next;
    for (const auto& part : level) {
      int m = 1;
      int y = s;
      while (part.log[y] < 0) {
        y = g.mul(y, s);
        ++m;
      }
      const int target = part.log[y];
      for (int val = 0; val < e; ++val) {
        if ((static_cast<long>(m) * val - target) % e != 0) continue;
        Partial q = part;
        int t_pow = s;
        for (int t = 1; t < m; ++t) {
          for (int x : part.elems) {
            int z = g.mul(x, t_pow);
            q.log[z] = static_cast<int>((part.log[x] + static_cast<long>(t) * val) % e);
            q.elems.push_back(z);
          }
          t_pow = g.mul(t_pow, s);
        }
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  std::vector<ClassFunction> out;
  for (const auto& part : level)
    out.push_back(ClassFunction::from_elements(h, [&](int x) { return Cyclotomic::root_of_unity(e, part.log[x]); }));
  return out;
}

std::vector<ClassFunction> dixon_schneider(const Subgroup& h) {
  const ClassData& cd = class_data(h);
  const FiniteGroup& g = h.group();
  const int r = cd.count();
  const long n = h.order();
  const int e = subgroup_exponent(h);
  i64 p = e + 1;
  while (!(nt::is_prime(p) && p * p > 4 * n)) p += e;
  const i64 zeta = powmod(primitive_root(p), (p - 1) / e, p);

  // a[j][l][k] = #{x in C_j : x^-1 z_k in C_l}
  std::vector<i64> a(static_cast<size_t>(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    const int z = cd.reps[k];
    for (int x : h.elements()) {
      int j = cd.class_of[x];
      int l = cd.class_of[g.mul(g.inv(x), z)];
      ++a[(static_cast<size_t>(j) * r + l) * r + k];
    }
  }
  auto class_matrix = [&](int j) {
    Mat m(r, std::vector<i64>(r));
    for (int l = 0; l < r; ++l)
      for (int k = 0; k < r; ++k) m[l][k] = a[(static_cast<size_t>(j) * r + l) * r + k] % p;
    return m;
  };

  Space full;
  for (int i = 0; i < r; ++i) {
    std::vector<i64> v(r, 0);
    v[i] = 1;
    full.rows.push_back(std::move(v));
    full.pivots.push_back(i);
  }
  std::vector<Space> spaces{full};
  {
    // a fixed pseudo-random combination usually separates everything at once
    std::mt19937_64 rng(0x5eed);
    Mat comb(r, std::vector<i64>(r, 0));
    for (int j = 1; j < r; ++j) {
      i64 c = static_cast<i64>(rng() % (p - 1)) + 1;
      Mat m = class_matrix(j);
      for (int l = 0; l < r; ++l)
        for (int k = 0; k < r; ++k) comb[l][k] = (comb[l][k] + c * m[l][k]) % p;
    }
    if (r > 1) spaces = split(full, comb, p);
  }
  for (int j = 1; j < r; ++j) {
    bool done = std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.rows.size() == 1; });
    if (done) break;
    Mat m = class_matrix(j);
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.rows.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& t : split(s, m, p)) next.push_back(std::move(t));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) fail(Errc::TheoremViolation, "eigenspaces did not separate");

  std::vector<ClassFunction> out;
  for (const auto& s : spaces) {
    const auto& w = s.rows[0];
    if (w[0] != 1) fail(Errc::TheoremViolation, "eigenvector with vanishing identity coordinate");
    i64 sum = 0;
    for (int j = 0; j < r; ++j)
      sum = (sum + w[j] * w[cd.inverse_class[j]] % p * invmod(cd.size(j), p)) % p;
    i64 d2 = n % p * invmod(sum, p) % p;
    i64 d = 0;
    for (i64 c = 1; c * c <= n; ++c)
      if (c * c % p == d2) {
        d = c;
        break;
      }
    if (d == 0) fail(Errc::TheoremViolation, "no valid degree for an eigenvector");
    std::vector<i64> chi(r);
    for (int j = 0; j < r; ++j) chi[j] = d * w[j] % p * invmod(cd.size(j), p) % p;
    std::vector<Cyclotomic> vals;
    for (int j = 0; j < r; ++j) {
      const int o = cd.rep_orders[j];
      const i64 zo = powmod(zeta, e / o, p);
      std::vector<i64> pw(o);
      for (int i = 0; i < o; ++i) pw[i] = chi[cd.power_class(j, i)];
      std::vector<Rational> mult(o);
      const i64 inv_o = invmod(o, p);
      for (int k = 0; k < o; ++k) {
        i64 acc = 0;
        const i64 step = powmod(zo, (p - 1) - k % (p - 1), p);  // zo^-k
        i64 cur = 1;
        for (int i = 0; i < o; ++i) {
          acc = (acc + pw[i] * cur) % p;
          cur = cur * step % p;
        }
        acc = acc * inv_o % p;
        if (acc > d) fail(Errc::TheoremViolation, "eigenvalue multiplicity out of range");
        mult[k] = Rational(static_cast<long>(acc));
      }
      vals.push_back(Cyclotomic::from_exponents(o, mult));
    }
    out.emplace_back(h, std::move(vals));
  }
  return out;
}

}  // namespace

// --- character tables -----------------------------------------------------

std::vector<long> CharacterTable::degrees() const {
  std::vector<long> out;
  for (const auto& chi : irr_) out.push_back(chi.degree_int());
  return out;
}

int CharacterTable::index_of(const ClassFunction& chi) const {
  for (size_t i = 0; i < irr_.size(); ++i)
    if (irr_[i] == chi) return static_cast<int>(i);
  return -1;
}

const CharacterTable& character_table(const Subgroup& h) {
  SubgroupData& d = h.data();
  std::call_once(d.table_once, [&] {
    std::vector<ClassFunction> irr = is_abelian(h) ? abelian_table(h) : dixon_schneider(h);
    const ClassFunction one = ClassFunction::trivial(h);
    std::sort(irr.begin(), irr.end(), [&](const ClassFunction& a, const ClassFunction& b) {
      bool ta = a == one, tb = b == one;
      if (ta != tb) return ta;
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a < b;
    });
    Rational total = 0;
    for (const auto& chi : irr) {
      total += chi.degree().rational() * chi.degree().rational();
      if (inner_product(chi, chi) != Cyclotomic(1L))
        fail(Errc::TheoremViolation, "computed character does not have norm 1");
    }
    if (total != h.order()) fail(Errc::TheoremViolation, "degree squares do not sum to the group order");
    d.table = std::make_shared<CharacterTable>(h, std::move(irr));
  });
  return *d.table;
}

std::string audit_table(const CharacterTable& t) {
  const ClassData& cd = t.classes();
  const size_t r = t.size();
  if (static_cast<int>(r) != cd.count()) return "number of characters differs from number of classes";
  Rational total = 0;
  for (size_t i = 0; i < r; ++i) {
    const long deg = t[i].degree_int();
    total += deg * deg;
    if (t.group().order() % deg != 0) return "degree does not divide the group order";
    for (size_t j = i; j < r; ++j) {
      Cyclotomic ip = inner_product(t[i], t[j]);
      if (ip != Cyclotomic(i == j ? 1L : 0L)) return "row orthogonality fails";
    }
  }
  if (total != t.group().order()) return "sum of squared degrees differs from the group order";
  for (int a = 0; a < cd.count(); ++a)
    for (int b = a; b < cd.count(); ++b) {
      Cyclotomic s;
      for (size_t i = 0; i < r; ++i) s += t[i].at_class(a) * t[i].at_class(b).conj();
      Cyclotomic expect = a == b ? Cyclotomic(static_cast<long>(cd.centralizer_orders[a])) : Cyclotomic();
      if (s != expect) return "column orthogonality fails";
    }
  return {};
}

// --- class function calculus ----------------------------------------------

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  same_domain(a, b);
  const ClassData& cd = a.classes();
  Cyclotomic s;
  for (int c = 0; c < cd.count(); ++c) {
    if (a.at_class(c).is_zero() || b.at_class(c).is_zero()) continue;
    s += a.at_class(c) * b.at_class(c).conj() * Cyclotomic(static_cast<long>(cd.size(c)));
  }
  return s * Cyclotomic(Rational(1, a.group().order()));
}

long inner_product_int(const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic ip = inner_product(a, b);
  if (!ip.is_integer()) fail(Errc::TheoremViolation, "inner product " + ip.to_string() + " is not an integer");
  return ip.rational().get_num().get_si();
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
  require(chi.group().contains(h), Errc::HandleMismatch, "restriction to a non-subgroup");
  return ClassFunction::from_elements(h, [&](int x) { return chi(x); });
}

ClassFunction induce(const ClassFunction& alpha, const Subgroup& g) {
  const Subgroup& h = alpha.group();
  require(g.contains(h), Errc::HandleMismatch, "induction to a group not containing the domain");
  const ClassData& cg = class_data(g);
  const ClassData& ch = alpha.classes();
  std::vector<Cyclotomic> acc(cg.count());
  for (int d = 0; d < ch.count(); ++d) {
    if (alpha.at_class(d).is_zero()) continue;
    acc[cg.class_of[ch.reps[d]]] += alpha.at_class(d) * Cyclotomic(static_cast<long>(ch.size(d)));
  }
  for (int c = 0; c < cg.count(); ++c)
    if (!acc[c].is_zero()) acc[c] *= Cyclotomic(Rational(cg.centralizer_orders[c], h.order()));
  return ClassFunction(g, std::move(acc));
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) { return a * b; }

bool constant_on_cosets(const ClassFunction& chi, const Subgroup& l) {
  const FiniteGroup& g = chi.group().group();
  for (int x : chi.group().elements())
    for (int y : l.generators())
      if (chi(g.mul(x, y)) != chi(x)) return false;
  return true;
}

std::vector<Cyclotomic> decompose(const ClassFunction& chi) {
  const auto& t = character_table(chi.group());
  std::vector<Cyclotomic> out;
  for (const auto& x : t.irr()) out.push_back(inner_product(chi, x));
  return out;
}

std::vector<long> multiplicities(const ClassFunction& chi) {
  std::vector<long> out;
  for (const auto& c : decompose(chi)) {
    if (!c.is_integer() || c.rational() < 0) fail(Errc::NotGenuineCharacter, "not a character: multiplicity " + c.to_string());
    out.push_back(c.rational().get_num().get_si());
  }
  return out;
}

bool is_genuine_character(const ClassFunction& chi) {
  for (const auto& c : decompose(chi))
    if (!c.is_integer() || c.rational() < 0) return false;
  return !chi.is_zero();
}

bool is_irreducible(const ClassFunction& chi) {
  return character_table(chi.group()).index_of(chi) >= 0;
}

std::vector<ClassFunction> irr_over(const Subgroup& g, const Subgroup& l, const ClassFunction& phi) {
  require(phi.group() == l, Errc::HandleMismatch, "phi is not a character of L");
  require(is_normal(g, l), Errc::NotNormal, "L is not normal");
  require(is_irreducible(phi), Errc::NotIrreducible, "phi is not irreducible");
  std::vector<ClassFunction> out;
  for (const auto& chi : character_table(g).irr())
    if (!inner_product(restrict_to(chi, l), phi).is_zero()) out.push_back(chi);
  return out;
}

std::vector<ClassFunction> irr_of_quotient(const Subgroup& h, const Subgroup& l) {
  std::vector<ClassFunction> out;
  for (const auto& chi : character_table(h).irr()) {
    bool ok = true;
    for (int x : l.generators())
      if (chi(x) != chi.degree()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(chi);
  }
  return out;
}

Subgroup kernel(const ClassFunction& chi) {
  std::vector<int> out;
  for (int x : chi.group().elements())
    if (chi(x) == chi.degree()) out.push_back(x);
  return chi.group().group().intern(std::move(out));
}

ClassFunction conjugate_character(const ClassFunction& phi, int g) {
  const FiniteGroup& G = phi.group().group();
  const int gi = G.inv(g);
  return ClassFunction::from_elements(phi.group(), [&](int x) {
    int y = G.conj(x, gi);
    require(phi.group().contains(y), Errc::NotNormal, "conjugating element does not normalize the domain");
    return phi(y);
  });
}

ClassFunction galois_conjugate_character(const ClassFunction& chi, long k) {
  const int e = subgroup_exponent(chi.group());
  require(nt::gcd(nt::mod(k, e), e) == 1, Errc::NotCoprime, "Galois element not coprime to the exponent");
  return chi.galois(k);
}

std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, int element) {
  const FiniteGroup& g = chi.group().group();
  const int o = g.element_order(element);
  std::vector<Cyclotomic> vals(o);
  int y = g.identity();
  for (int i = 0; i < o; ++i) {
    vals[i] = chi(y);
    y = g.mul(y, element);
  }
  std::vector<long> out(o);
  for (int k = 0; k < o; ++k) {
    Cyclotomic acc;
    for (int i = 0; i < o; ++i) acc += vals[i] * Cyclotomic::root_of_unity(o, -static_cast<long>(i) * k);
    acc *= Cyclotomic(Rational(1, o));
    if (!acc.is_integer() || acc.rational() < 0)
      fail(Errc::NotGenuineCharacter, "eigenvalue multiplicity " + acc.to_string() + " is not a natural number");
    out[k] = acc.rational().get_num().get_si();
  }
  return out;
}

namespace {

// exponent s with det(rep) = zeta_o^s
std::pair<int, long> det_exponent(const ClassFunction& chi, int element) {
  auto m = eigenvalue_multiplicities(chi, element);
  const int o = static_cast<int>(m.size());
  long s = 0;
  for (int k = 0; k < o; ++k) s += k * m[k];
  return {o, nt::mod(s, o)};
}

}  // namespace

ClassFunction determinant_character(const ClassFunction& chi) {
  return ClassFunction::from_elements(chi.group(), [&](int x) {
    auto [o, s] = det_exponent(chi, x);
    return Cyclotomic::root_of_unity(o, s);
  });
}

int determinantal_order(const ClassFunction& chi) {
  long ord = 1;
  for (int r : chi.classes().reps) {
    auto [o, s] = det_exponent(chi, r);
    ord = nt::lcm(ord, o / nt::gcd(o, s));
  }
  return static_cast<int>(ord);
}

int linear_order(const ClassFunction& lambda) {
  long ord = 1;
  for (const auto& v : lambda.values()) {
    int o = v.root_of_unity_order();
    require(o > 0, Errc::NotGenuineCharacter, "value of a linear character is not a root of unity");
    ord = nt::lcm(ord, o);
  }
  return static_cast<int>(ord);
}

std::vector<ClassFunction> extensions_cyclic(const ClassFunction& phi, const Subgroup& h) {
  const Subgroup& l = phi.group();
  require(is_normal(h, l), Errc::NotNormal, "L is not normal in H");
  // H/L is cyclic iff some coset has order |H:L|
  const FiniteGroup& G = h.group();
  const long index = h.order() / l.order();
  bool cyclic = false;
  for (int x : h.elements()) {
    long m = 1;
    for (int y = x; !l.contains(y); y = G.mul(y, x)) ++m;
    if (m == index) {
      cyclic = true;
      break;
    }
  }
  require(cyclic, Errc::NotCyclic, "H/L is not cyclic");
  for (int g : h.generators())
    require(conjugate_character(phi, g) == phi, Errc::NotInvariant, "phi is not H-invariant");
  auto out = irr_over(h, l, phi);
  if (static_cast<int>(out.size()) != h.order() / l.order())
    fail(Errc::TheoremViolation, "wrong number of extensions");
  for (const auto& chi : out)
    if (restrict_to(chi, l) != phi) fail(Errc::TheoremViolation, "constituent over invariant phi does not extend it");
  return out;
}

Cyclotomic frobenius_schur(const ClassFunction& chi) {
  const ClassData& cd = chi.classes();
  Cyclotomic s;
  for (int c = 0; c < cd.count(); ++c) s += chi.at_class(cd.power_class(c, 2)) * Cyclotomic(static_cast<long>(cd.size(c)));
  return s * Cyclotomic(Rational(1, chi.group().order()));
}

NumberFieldDescriptor field_of_values(const ClassFunction& chi) { return field_of_values(chi.values()); }

}  // namespace fgct
