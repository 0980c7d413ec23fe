// Acceptance gate: one pass/fail line per criterion. Exits nonzero if any
// criterion fails. Orders and sizes here are deliberately the full ones, so
// this binary is slower than the unit suite (several minutes).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qrr/bailey.hpp"
#include "qrr/corpus.hpp"
#include "qrr/dsl.hpp"
#include "qrr/special_series.hpp"

using namespace qrr;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& desc, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (!ok) ++g_failures;
    std::printf("%s criterion-%02d %s (%ld ms)%s%s\n", ok ? "PASS" : "FAIL", n, desc.c_str(),
                ms, err.empty() ? "" : " -- ", err.c_str());
    std::fflush(stdout);
}

bool verify_pass(const std::string& id, int order) {
    return verify(id, order).status == "pass";
}

bool timed_verify(const std::string& id, int order, long budget_ms) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = verify_pass(id, order);
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return ok && ms < budget_ms;
}

const Rational kSevenX[7] = {Rational(0),          make_rational(1, 2),
                             make_rational(-1, 2), Rational(1),
                             Rational(-1),         make_rational(3, 2),
                             make_rational(-3, 2)};

std::string corpus_text() {
    std::ifstream f(QRR_CORPUS_FILE);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    criterion(1, "dyson-1.1 verifies at order 200 in under 5s",
              [] { return timed_verify("dyson-1.1", 200, 5000); });

    criterion(2, "entry-5.3.4 verifies at order 200 in under 5s",
              [] { return timed_verify("entry-5.3.4", 200, 5000); });

    criterion(3, "thm-1.1 at nine x specializations, order 150; x=1/2 matches entry-5.3.4",
              [] {
                  const Rational xs[9] = {Rational(0),          make_rational(1, 2),
                                          make_rational(-1, 2), Rational(1),
                                          Rational(-1),         make_rational(3, 2),
                                          make_rational(-3, 2), Rational(2),
                                          Rational(-2)};
                  for (const Rational& x : xs)
                      if (verify("thm-1.1", 150, x).status != "pass") return false;
                  return find_identity("thm-1.1").lhs_x(make_rational(1, 2), 150).coeffs() ==
                         find_identity("entry-5.3.4").lhs(150).coeffs();
              });

    criterion(4, "finite polynomial identities for n = 0..25 at n+2 sample points", [] {
        for (long n = 0; n <= 25; ++n) {
            if (!finite_identity_check(FiniteIdentity::thm3_1, n, 100).passed) return false;
            if (!finite_identity_check(FiniteIdentity::andrews1_2, n, 100).passed) return false;
        }
        return true;
    });

    criterion(5, "both Bailey pairs at 7 special x, n <= 25, order 200 + negative control",
              [] {
                  for (const Rational& x : kSevenX) {
                      if (!check_bailey_pair(key_pair(x), 25, 200).passed) return false;
                      if (!check_bailey_pair(andrews_pair(x), 25, 200).passed) return false;
                  }
                  BaileyPair bad = key_pair(make_rational(1, 2));
                  auto good = bad.beta;
                  bad.beta = [good](long n, int order) {
                      FormalSeries b = good(n, order);
                      if (n == 2) b.add_term(1, 5);
                      return b;
                  };
                  const CheckReport rep = check_bailey_pair(bad, 25, 200);
                  return !rep.passed && rep.failed_index == 2;
              });

    criterion(6, "weak forms reproduce single-sum builders bit-for-bit at order 150", [] {
        const int N = 150;
        for (const Rational& x :
             {make_rational(1, 2), Rational(-1), make_rational(3, 2)}) {
            const BaileyPair p = key_pair(x);
            auto [l1, r1] = apply_weak_form(WeakForm::WF1, p, N);
            if (l1.coeffs() != corpus::maini_lhs(x, N).coeffs()) return false;
            if (r1.coeffs() != corpus::maini_rhs(x, N).coeffs()) return false;
            auto [l2, r2] = apply_weak_form(WeakForm::WF2, p, N);
            if (l2.coeffs() != corpus::rr2_lhs(x, N).coeffs()) return false;
            if (r2.coeffs() != corpus::rr2_rhs(x, N).coeffs()) return false;
            auto [l3, r3] = apply_weak_form(WeakForm::WF3, p, N);
            if (l3.coeffs() != corpus::rr3_lhs(x, N).coeffs()) return false;
            if (r3.coeffs() != corpus::rr3_rhs(x, N).coeffs()) return false;
            auto [l4, r4] = apply_weak_form(WeakForm::WF4, p, N);
            if (l4.coeffs() != corpus::thmd_lhs(x, N).coeffs()) return false;
            if (r4.coeffs() != corpus::thmd_rhs(x, N).coeffs()) return false;
            auto [ml, mr] = apply_multisum(p, 1, N);
            if (ml.coeffs() != l1.coeffs() || mr.coeffs() != r1.coeffs()) return false;
        }
        return true;
    });

    criterion(7, "specialization families verify at order 150 + q -> -q mirror", [] {
        const char* ids[] = {"entry-5.3.3", "entry-5.3.2", "cor-5.2a", "cor-5.2b",
                             "cor-5.2c",    "cor-5.2d",    "cor-5.2e", "cor-5.2f",
                             "cor-5.4a",    "cor-5.4b",    "cor-5.4c", "cor-5.4d",
                             "cor-6.2",     "cor-6.3",     "cor-6.4",  "cor-6.5",
                             "mock-mu2"};
        for (const char* id : ids)
            if (!verify_pass(id, 150)) return false;
        const int N = 100;
        const FormalSeries la = find_identity("fib-4.4a").lhs(N);
        const FormalSeries lb = find_identity("fib-4.4b").lhs(N);
        return equal_to_order(substitute_negate(la), lb, N) &&
               equal_to_order(substitute_negate(lb), la, N);
    });

    criterion(8, "multisum corollaries for k = 1..3 at order 100; k = 1 matches single sums",
              [] {
                  for (long k = 1; k <= 3; ++k)
                      for (const char* fam : {"a", "b", "c", "d"}) {
                          const std::string id =
                              "cor-4.6" + std::string(fam) + "-k" + std::to_string(k);
                          if (!verify_pass(id, 100)) return false;
                      }
                  for (long k = 1; k <= 3; ++k)
                      if (!verify_pass("multisum-4.5-k" + std::to_string(k), 100)) return false;
                  const int N = 100;
                  if (!equal_to_order(find_identity("cor-4.6a-k1").lhs(N),
                                      find_identity("entry-5.3.3").lhs(N), N))
                      return false;
                  if (!equal_to_order(find_identity("cor-4.6c-k1").lhs(N),
                                      find_identity("entry-5.3.2").lhs(N), N))
                      return false;
                  return equal_to_order(find_identity("cor-4.6d-k1").lhs(N),
                                        corpus::maini_lhs(make_rational(3, 2), N), N);
              });

    criterion(9, "heine grid (alpha, beta) in {0..4}^2 at order 150", [] {
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= 4; ++b) {
                const std::string id =
                    "heine-a" + std::to_string(a) + "-b" + std::to_string(b);
                if (!verify_pass(id, 150)) return false;
            }
        return true;
    });

    criterion(10, "Hecke-type families at order 150 + inner sums vs hand enumeration", [] {
        for (const char* id :
             {"thm-7.1", "thm-7.5", "cor-7.2", "cor-7.3", "cor-7.4", "cor-7.6a",
              "cor-7.6b", "cor-7.6c"})
            if (!verify_pass(id, 150)) return false;
        // hand enumeration of the two inner-sum shapes for n <= 4
        {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-(n / 2), n / 2}; };
            spec.terms = [](long n, long j) {
                Rational c = ((n + j) % 2 == 0) ? 1 : -1;
                return std::vector<std::pair<long, Rational>>{{n * n + n - j * j, c}};
            };
            spec.min_exponent = [](long n) { return n * n + n - (n / 2) * (n / 2); };
            const int N = 25;  // < min_exponent(5) = 26
            FormalSeries want(N);
            for (long n = 0; n <= 4; ++n)
                for (long j = -(n / 2); j <= n / 2; ++j)
                    want.add_term(((n + j) % 2 == 0) ? 1 : -1, n * n + n - j * j);
            if (!equal_to_order(hecke_eval(spec, N), want, N)) return false;
        }
        {
            HeckeSpec spec;
            spec.j_range = [](long n) { return std::pair<long, long>{-n, n}; };
            spec.terms = [](long n, long j) {
                const Rational c = (j % 2 == 0) ? 1 : -1;
                const long e = 4 * n * n - 2 * n - j * j;
                return std::vector<std::pair<long, Rational>>{{e, c}, {e + 12 * n + 6, -c}};
            };
            spec.min_exponent = [](long n) { return 3 * n * n - 2 * n; };
            const int N = 64;  // < min_exponent(5) = 65
            FormalSeries want(N);
            for (long n = 0; n <= 4; ++n)
                for (long j = -n; j <= n; ++j) {
                    const Rational c = (j % 2 == 0) ? 1 : -1;
                    want.add_term(c, 4 * n * n - 2 * n - j * j);
                    want.add_term(-c, 4 * n * n - 2 * n - j * j + 12 * n + 6);
                }
            if (!equal_to_order(hecke_eval(spec, N), want, N)) return false;
        }
        return true;
    });

    criterion(11, "exact q-binomial identity for n = 0..30 + its limit at order 100", [] {
        for (long n = 0; n <= 30; ++n)
            if (!qbinom_identity_check(n).passed) return false;
        auto [lhs, rhs] = qbinom_limit_sides(100);
        return equal_to_order(lhs, rhs, 100);
    });

    criterion(12, "property suites (ring laws, Pochhammer, q-Pascal, JTP, Chebyshev, partitions)",
              [] {
                  // ring laws at order 64, 100 random triples
                  std::mt19937 rng(4242);
                  std::uniform_int_distribution<long> num(-9, 9);
                  std::uniform_int_distribution<long> den(1, 7);
                  auto rand_series = [&](int order) {
                      FormalSeries s(order);
                      for (int e = 0; e <= order; ++e)
                          s.add_term(make_rational(num(rng), den(rng)), e);
                      return s;
                  };
                  const int N = 64;
                  for (int t = 0; t < 100; ++t) {
                      FormalSeries a = rand_series(N), b = rand_series(N), c = rand_series(N);
                      if (!equal_to_order(a + b, b + a, N)) return false;
                      if (!equal_to_order(a * b, b * a, N)) return false;
                      if (!equal_to_order((a * b) * c, a * (b * c), N)) return false;
                      if (!equal_to_order(a * (b + c), a * b + a * c, N)) return false;
                  }
                  // Pochhammer shift, n <= 30
                  for (long n = 0; n <= 30; ++n) {
                      FormalSeries lhs =
                          pochhammer_finite(SignedMonomial(-1, 2), 3, n + 1, N);
                      FormalSeries rhs = pochhammer_finite(SignedMonomial(-1, 2), 3, n, N);
                      const long fe = 2 + 3 * n;
                      if (fe <= N) rhs.times_binomial(1, fe);
                      if (!equal_to_order(lhs, rhs, N)) return false;
                  }
                  // q-Pascal + symmetry, n <= 30
                  for (long n = 1; n <= 30; ++n)
                      for (long k = 0; k <= n; ++k) {
                          FormalSeries lhs = qbinomial(n, k, 1, N);
                          FormalSeries rhs = qbinomial(n - 1, k - 1, 1, N);
                          FormalSeries t = qbinomial(n - 1, k, 1, N);
                          t.times_monomial(1, k);
                          rhs += t;
                          if (!equal_to_order(lhs, rhs, N)) return false;
                          if (!equal_to_order(lhs, qbinomial(n, n - k, 1, N), N)) return false;
                      }
                  // triple product sum = product at order 200
                  const std::tuple<long, long, long> jtp_cases[] = {
                      {-1, 1, 2}, {1, 1, 3}, {1, 2, 3}};
                  for (const auto& [c, e, b] : jtp_cases) {
                      const SignedMonomial z(Rational(c), e);
                      if (!equal_to_order(jacobi_triple_sum(z, b, 200),
                                          jacobi_triple_product(z, b, 200), 200))
                          return false;
                  }
                  // closed-form Chebyshev table vs the recurrence, n <= 500
                  for (const Rational& x : kSevenX) {
                      ChebyshevEvaluator ev(x);
                      for (long n = 0; n <= 500; ++n)
                          if (cheb_special(x, n) != ev.v(n)) return false;
                  }
                  // L_{2n} = F_{2n+1} + F_{2n-1}, index <= 500
                  for (long n = 1; 2 * n <= 500; ++n)
                      if (lucas(2 * n) != fibonacci(2 * n + 1) + fibonacci(2 * n - 1))
                          return false;
                  // partition DP = invert((q;q)_inf) at order 500
                  return equal_to_order(
                      partition_oracle(500),
                      series_invert(pochhammer_infinite(SignedMonomial(1, 1), 1, 500)), 500);
              });

    criterion(13, "corpus file round-trips and DSL evaluation matches native builders", [] {
        const auto stanzas = dsl::parse_corpus(corpus_text());
        if (stanzas.size() != 75) return false;
        for (const auto& st : stanzas) {
            for (const auto& e : {st.lhs, st.rhs}) {
                const std::string printed = dsl::print(e);
                if (dsl::print(dsl::parse(printed)) != printed) return false;
            }
            const IdentityRecord& rec = find_identity(st.id);
            const int N = (st.order > 0) ? st.order : rec.default_order;
            if (st.xparam) {
                for (const Rational& x : {make_rational(1, 2), make_rational(-3, 2)}) {
                    if (!equal_to_order(dsl::eval(st.lhs, N, x), rec.lhs_x(x, N), N))
                        return false;
                    if (!equal_to_order(dsl::eval(st.rhs, N, x), rec.rhs_x(x, N), N))
                        return false;
                }
            } else {
                if (!equal_to_order(dsl::eval(st.lhs, N), rec.lhs(N), N)) return false;
                if (!equal_to_order(dsl::eval(st.rhs, N), rec.rhs(N), N)) return false;
            }
        }
        // malformed inputs produce located syntax errors
        const char* bad[] = {"poch(q, q,", "1 +\n* 2", "identity"};
        int caught = 0;
        for (const char* src : bad) {
            try {
                if (std::string(src).rfind("identity", 0) == 0)
                    dsl::parse_corpus(src);
                else
                    dsl::parse(src);
            } catch (const SyntaxError& e) {
                if (e.line >= 1 && e.column >= 1) ++caught;
            }
        }
        return caught == 3;
    });

    criterion(14, "the whole registry verifies at order 100 in under 60s", [] {
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& r : registry())
            if (verify(r.id, 100).status != "pass") return false;
        const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        return ms < 60000;
    });

    if (g_failures == 0) {
        std::printf("ACCEPTANCE: all 14 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
}
