#include "doctest.h"

#include <random>
#include <vector>

#include "fgct/cyclotomic.hpp"
#include "fgct/error.hpp"

using fgct::Cyclotomic;
using fgct::Rational;

namespace {

Cyclotomic z(int n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Random element of Q(zeta_n) as a sum of a few root-of-unity terms.
Cyclotomic random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, n - 1), terms(0, 4);
  Cyclotomic x;
  for (int t = terms(rng); t > 0; --t) x += Cyclotomic(static_cast<long>(coeff(rng))) * z(n, expo(rng));
  return x;
}

}  // namespace

TEST_CASE("basic identities") {
  CHECK(z(3, 1) + z(3, 2) == Cyclotomic(-1L));
  CHECK(z(4) * z(4) == Cyclotomic(-1L));
  Cyclotomic a = Cyclotomic(1L) + z(5);
  CHECK(a * a.inverse() == Cyclotomic(1L));
  CHECK(z(1) == Cyclotomic(1L));
  CHECK(z(2) == Cyclotomic(-1L));
  CHECK(z(6) == -z(3, 2));
  CHECK(z(6).conductor() == 3);
  CHECK((z(8) + z(8, 7)).conductor() == 8);  // sqrt 2
  CHECK((z(8) + z(8, 7)) * (z(8) + z(8, 7)) == Cyclotomic(2L));
  CHECK_THROWS_AS(Cyclotomic().inverse(), fgct::Error);
}

TEST_CASE("sum of all primitive roots is the Moebius function") {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30}) {
    Cyclotomic s;
    for (int k : fgct::nt::units(n)) s += z(n, k);
    int mu = 1, m = n;
    for (int p : fgct::nt::prime_divisors(n)) {
      m /= p;
      mu = (m % p == 0) ? 0 : -mu;
    }
    CHECK(s == Cyclotomic(static_cast<long>(mu)));
  }
}

TEST_CASE("galois action") {
  CHECK(z(3).galois(2) == z(3, 2));
  CHECK(Cyclotomic(Rational(5, 7)).galois(3) == Cyclotomic(Rational(5, 7)));
  CHECK((z(3) + z(3, 2)).galois(2) == Cyclotomic(-1L));
  CHECK_THROWS_AS(z(3).galois(3), fgct::Error);
  CHECK(z(12, 5).conj() == z(12, 7));
}

TEST_CASE("canonical form survives arbitrary embeddings") {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 7, 8, 9, 12, 15, 20, 21}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic x = random_element(rng, n);
      // embed x into a larger field by adding and subtracting a foreign root of unity
      Cyclotomic y = x + z(2 * n + 1) - z(2 * n + 1);
      CHECK(x == y);
      CHECK(x.conductor() % 4 != 2);
      if (!x.is_zero()) CHECK(x * x.inverse() == Cyclotomic(1L));
    }
  }
}

TEST_CASE("galois is a field automorphism") {
  std::mt19937 rng(11);
  for (int n : {5, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 15; ++trial) {
      Cyclotomic x = random_element(rng, n), y = random_element(rng, n);
      for (int k : fgct::nt::units(n)) {
        CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
        CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
      }
      Cyclotomic norm = x * x.conj();
      CHECK(norm.conj() == norm);
    }
  }
}

TEST_CASE("root of unity order") {
  long e = 0;
  CHECK(z(9, 6).root_of_unity_order(&e) == 3);
  CHECK(z(3, e) == z(9, 6));
  CHECK((-z(3)).root_of_unity_order(&e) == 6);
  CHECK(Cyclotomic(1L).root_of_unity_order() == 1);
  CHECK(Cyclotomic(-1L).root_of_unity_order() == 2);
  CHECK(Cyclotomic(2L).root_of_unity_order() == 0);
  CHECK((z(5) + 1).root_of_unity_order() == 0);
}

TEST_CASE("fields of values") {
  std::vector<Cyclotomic> vals{1, -1, 0};
  CHECK(fgct::field_of_values(vals) == fgct::rationals_field());
  std::vector<Cyclotomic> v3{z(3)};
  auto f3 = fgct::field_of_values(v3);
  CHECK(f3.conductor == 3);
  CHECK(f3.stabilizer == std::vector<int>{1});
  CHECK(f3.degree() == 2);
  // Q(sqrt(-3)) = Q(zeta_3), and sqrt 5 generates a proper subfield of Q(zeta_5)
  std::vector<Cyclotomic> s5{z(5) + z(5, 4)};
  auto f5 = fgct::field_of_values(s5);
  CHECK(f5.conductor == 5);
  CHECK(f5.degree() == 2);
  CHECK(fgct::field_contains(fgct::cyclotomic_field(5), f5));
  CHECK(!fgct::field_contains(f5, fgct::cyclotomic_field(5)));
  CHECK(fgct::contains_root_of_unity(f3, 3));
  CHECK(fgct::contains_root_of_unity(f3, 6));
  CHECK(!fgct::contains_root_of_unity(f5, 5));
  CHECK(fgct::compositum(f3, fgct::cyclotomic_field(4)) == fgct::cyclotomic_field(12));
  auto grown = v3;
  grown.push_back(z(4));
  CHECK(fgct::field_contains(fgct::field_of_values(grown), f3));
}

TEST_CASE("text form") {
  CHECK(Cyclotomic(Rational(-3, 4)).to_string() == "-3/4");
  CHECK(z(3).to_string() == "E(3)");
  CHECK((Cyclotomic(1L) - z(3, 1) * 2).to_string() == "1-2*E(3)");
}
