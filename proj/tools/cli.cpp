#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bandet/band.hpp"
#include "bandet/oracle.hpp"
#include "bandet/perm.hpp"
#include "bandet/serialize.hpp"

namespace bandet::cli {

namespace {

struct CheckFailure {
    std::string message;
};

RingElement parse_ring(const std::string& text) {
    if (text == "b") {
        return Poly::variable();
    }
    return parse_integer(text);
}

// A bare "b" on either side makes the spec polynomial in b; integers on the
// other side are lifted to constants.
BandSpec make_spec(std::int64_t n, std::int64_t k, std::int64_t l, const std::string& a_text,
                   const std::string& b_text) {
    RingElement a = parse_ring(a_text);
    RingElement b = parse_ring(b_text);
    if (a.is_poly() && b.is_integer()) {
        b = Poly::constant(b.as_integer());
    } else if (b.is_poly() && a.is_integer()) {
        a = Poly::constant(a.as_integer());
    }
    return BandSpec::make(n, k, l, std::move(a), std::move(b));
}

std::string describe_residue(const BandSpec& spec) {
    const BandResidue r = residue(spec);
    std::ostringstream os;
    if (r.band_case == BandCase::lower_width_one) {
        os << "l=1, n = " << spec.upper() << "*" << r.quotient << " + " << r.p << " (0 < p <= k)";
    } else {
        const std::int64_t m = spec.upper() + spec.lower() - 1;
        os << "l>1, n = " << m << "*" << r.quotient << " + " << r.p << " (0 <= p < " << m << ")";
        if (r.p > 1) {
            os << ", vanishing residue";
        }
    }
    return os.str();
}

CharMatrix parse_char_matrix(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    for (char c : text) {
        if (c == ';') {
            rows.emplace_back();
        } else if (c == '0' || c == '1') {
            rows.back().push_back(c - '0');
        } else if (c != ',' && c != ' ') {
            throw InvalidArgumentError(std::string("unexpected character '") + c + "' in matrix");
        }
    }
    return CharMatrix(rows);
}

std::string join(std::span<const int> perm) {
    std::string s;
    for (int v : perm) {
        s += std::to_string(v);
        s += perm.size() > 9 ? " " : "";
    }
    if (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

void print_rows(std::ostream& out, const std::vector<CensusRow>& rows, const std::string& format) {
    if (format == "json") {
        for (const auto& row : rows) {
            out << to_json(row).dump() << "\n";
        }
        return;
    }
    out << "n,per,det,even,odd\n";
    for (const auto& r : rows) {
        out << r.n << "," << r.per << "," << r.det << "," << r.even << "," << r.odd << "\n";
    }
}

// ---- check -----------------------------------------------------------------

struct Suite {
    std::string name;
    std::function<std::int64_t()> body;
};

struct CheckOptions {
    bool full = false;
    bool corrupt_sign = false;
};

template <typename... Args>
void expect(bool ok, Args&&... context) {
    if (!ok) {
        std::ostringstream os;
        (os << ... << context);
        throw CheckFailure{os.str()};
    }
}

std::vector<Suite> build_suites(const CheckOptions& opt, const Limits& limits) {
    const std::int64_t n_max = opt.full ? 9 : 7;
    std::vector<Suite> suites;

    suites.push_back({"closed form vs laplace", [=] {
                          std::int64_t cases = 0;
                          const auto rule = opt.corrupt_sign ? detail::SignRule::corrupted : detail::SignRule::exact;
                          for (std::int64_t n = 1; n <= n_max; ++n) {
                              for (std::int64_t k = 1; k <= n; ++k) {
                                  for (std::int64_t l = 1; l <= n; ++l) {
                                      for (int a = -2; a <= 2; ++a) {
                                          for (int b = -2; b <= 2; ++b) {
                                              if (a == b) {
                                                  continue;
                                              }
                                              const BandSpec s = BandSpec::make(n, k, l, a, b);
                                              const RingElement closed = detail::det_closed_form(s, rule).expand();
                                              const RingElement oracle = det_laplace(materialize(s), limits.laplace);
                                              expect(closed == oracle, "n=", n, " k=", k, " l=", l, " a=", a,
                                                     " b=", b, ": closed form ", closed, ", laplace ", oracle);
                                              ++cases;
                                          }
                                      }
                                  }
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"vanishing residues", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 2; n <= n_max; ++n) {
                              for (std::int64_t k = 2; k <= n; ++k) {
                                  for (std::int64_t l = 2; l <= k; ++l) {
                                      if (residue_two_sided(n, k, l).p <= 1) {
                                          continue;
                                      }
                                      const RingElement d = det_laplace(materialize(BandSpec::make(n, k, l, 1, 0)));
                                      expect(d.is_zero(), "n=", n, " k=", k, " l=", l, ": laplace gave ", d);
                                      ++cases;
                                  }
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"recurrence vs closed form", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 2; n <= n_max + 3; ++n) {
                              for (std::int64_t k = 1; k < n; ++k) {
                                  for (int a = -2; a <= 2; ++a) {
                                      for (int b = -2; b <= 2; ++b) {
                                          if (a == b) {
                                              continue;
                                          }
                                          const RingElement r = det_recurrence(n, k, a, b);
                                          const RingElement c = det_case1(n, k, a, b);
                                          expect(r == c, "n=", n, " k=", k, " l=1 a=", a, " b=", b,
                                                 ": recurrence ", r, ", closed form ", c);
                                          ++cases;
                                      }
                                  }
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"bordered and triangular forms", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 2; n <= n_max; ++n) {
                              for (int a = -2; a <= 2; ++a) {
                                  for (int b = -2; b <= 2; ++b) {
                                      if (a == b) {
                                          continue;
                                      }
                                      for (std::int64_t k = 1; k < n; ++k) {
                                          const RingElement f = det_laplace(bordered_matrix(n, k, a, b));
                                          expect(f == f_closed(n, a, b, k), "n=", n, " k=", k, " a=", a, " b=", b,
                                                 ": bordered determinant ", f);
                                          ++cases;
                                      }
                                      const RingElement g = det_laplace(materialize(BandSpec::make(n, n, 1, a, b)));
                                      expect(g == g_closed(n, a, b), "n=", n, " a=", a, " b=", b,
                                             ": triangular determinant ", g);
                                      ++cases;
                                  }
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"all-b rows", [=] {
                          std::int64_t cases = 0;
                          const std::int64_t top = opt.full ? 10 : 7;
                          for (std::int64_t n = 1; n <= top; ++n) {
                              for (std::int64_t k = 1; k <= top; ++k) {
                                  for (std::int64_t l = 1; l <= top; ++l) {
                                      const BandSpec s = BandSpec::make(n, k, l, 1, 0);
                                      std::int64_t scanned = 0;
                                      for (std::int64_t i = 1; i <= n; ++i) {
                                          bool all_b = true;
                                          for (std::int64_t j = 1; j <= n && all_b; ++j) {
                                              all_b = entry(s, i, j) == s.b();
                                          }
                                          scanned += all_b ? 1 : 0;
                                      }
                                      expect(scanned == all_b_row_count(s), "n=", n, " k=", k, " l=", l,
                                             ": scanned ", scanned, " all-b rows, formula ", all_b_row_count(s));
                                      ++cases;
                                  }
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"polynomial determinant", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 1; n <= std::min<std::int64_t>(n_max, 8); ++n) {
                              const DenseMatrix c = excedance_matrix(n);
                              const RingElement d = det_laplace(c, limits.laplace);
                              const Poly bm1 = Poly::variable() - Poly::constant(1);
                              const RingElement want = pow(RingElement(bm1), static_cast<std::uint64_t>(n - 1)) *
                                                       RingElement(Poly::variable());
                              expect(d == want, "n=", n, ": det C_n = ", d);
                              for (std::int64_t k = 1; k <= n; ++k) {
                                  expect(coeff(d.as_poly(), static_cast<std::size_t>(k)) ==
                                             excedance_det_coeff(n, k),
                                         "n=", n, " k=", k, ": coefficient mismatch");
                                  ++cases;
                              }
                          }
                          return cases;
                      }});

    suites.push_back({"permanent agreement", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 1; n <= (opt.full ? 12 : 9); ++n) {
                              const Integer rec = menage_a_permanent_rec(n);
                              const Integer sum = menage_a_permanent_sum(n);
                              const RingElement ryser =
                                  permanent_ryser(menage_a_matrix(n).to_dense(), limits.ryser_integer);
                              expect(rec == sum && RingElement(rec) == ryser, "n=", n, ": recurrence ", rec,
                                     ", sum ", sum, ", ryser ", ryser);
                              ++cases;
                          }
                          return cases;
                      }});

    suites.push_back({"parity census vs enumeration", [=] {
                          std::int64_t cases = 0;
                          for (std::int64_t n = 1; n <= n_max; ++n) {
                              for (const auto& [name, m] : {std::pair{"menage-a", menage_a_matrix(n)},
                                                            std::pair{"menage-b", menage_b_matrix(n)}}) {
                                  const ParityCount fast = parity_counts(m, limits);
                                  const ParityCount slow = brute_force_parity(m, limits.enumeration);
                                  expect(fast == slow, name, " n=", n, ": even/odd ", fast.even, "/", fast.odd,
                                         ", enumeration ", slow.even, "/", slow.odd);
                                  ++cases;
                              }
                              const auto fast = excedance_census(n, limits);
                              const auto slow = brute_force_excedance_census(n, limits.enumeration);
                              expect(fast == slow, "excedance n=", n, ": census differs from enumeration");
                              ++cases;
                          }
                          return cases;
                      }});

    return suites;
}

int cmd_check(const std::string& level, const std::string& fault, std::ostream& out, std::ostream& err) {
    CheckOptions opt;
    opt.full = level == "full";
    opt.corrupt_sign = fault == "sign";
    const Limits limits = Limits::from_env();
    std::int64_t total = 0;
    for (const auto& suite : build_suites(opt, limits)) {
        std::int64_t cases = 0;
        try {
            cases = suite.body();
        } catch (const CheckFailure& f) {
            out << "FAIL " << suite.name << ": " << f.message << "\n";
            err << "check failed\n";
            return check_failed;
        }
        out << "ok   " << suite.name << ": " << cases << " cases\n";
        total += cases;
    }
    out << "all " << total << " cases passed (level " << level << ")\n";
    return ok;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const std::vector<std::int64_t>& sizes, const std::string& method, std::int64_t k, std::int64_t l,
              const std::string& a, const std::string& b, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    const Limits limits = Limits::from_env();
    out << "n,closed_seconds," << method << "_seconds,agree\n";
    for (std::int64_t n : sizes) {
        const BandSpec s = make_spec(n, k, l, a, b);
        if (!s.a().is_integer()) {
            throw InvalidArgumentError("bench needs integer a and b");
        }
        if (method == "laplace" && static_cast<std::size_t>(n) > limits.laplace) {
            throw SizeLimitError("Laplace determinant refused: order " + std::to_string(n) + " exceeds limit " +
                                 std::to_string(limits.laplace));
        }
        const auto t0 = clock::now();
        const RingElement closed = det_closed(s);
        const auto t1 = clock::now();
        const DenseMatrix m = materialize(s);
        const auto t2 = clock::now();
        const RingElement other = method == "laplace" ? det_laplace(m, limits.laplace) : RingElement(det_bareiss(m));
        const auto t3 = clock::now();
        const std::chrono::duration<double> closed_time = t1 - t0;
        const std::chrono::duration<double> other_time = t3 - t2;
        out << n << "," << std::scientific << std::setprecision(3) << closed_time.count() << ","
            << other_time.count() << std::defaultfloat << "," << (closed == other ? "yes" : "no") << "\n";
        if (closed != other) {
            return check_failed;
        }
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinants of binary band matrices and restricted-permutation parity counts", "bandet"};
    app.require_subcommand(1);

    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t l = 1;
    std::string a = "1";
    std::string b = "0";
    std::string method = "closed";
    std::string format = "csv";
    std::string family;
    std::string matrix;
    std::string level = "quick";
    std::string fault = "none";
    std::int64_t n_max = 10;
    std::int64_t census_k = 0;
    bool list = false;
    bool brute = false;
    std::vector<std::int64_t> sizes;
    std::string bench_method = "bareiss";
    std::int64_t bench_k = 3;
    std::int64_t bench_l = 2;
    std::string bench_a = "1";
    std::string bench_b = "2";

    auto* det = app.add_subcommand("det", "Determinant of one band matrix");
    det->add_option("--n", n, "order")->required()->check(CLI::PositiveNumber);
    det->add_option("--k", k, "upper width: b where j - i < k")->required()->check(CLI::PositiveNumber);
    det->add_option("--l", l, "lower width: b where i - j < l")->capture_default_str()->check(CLI::PositiveNumber);
    det->add_option("--a", a, "entry outside the band; integer or b")->capture_default_str();
    det->add_option("--b", b, "entry inside the band; integer or b")->capture_default_str();
    det->add_option("--method", method)
        ->check(CLI::IsMember({"closed", "recurrence", "laplace", "bareiss"}))
        ->capture_default_str();

    auto* perm = app.add_subcommand("perm", "Even/odd counts for a 0/1 characteristic matrix");
    auto* perm_family =
        perm->add_option("--family", family)->check(CLI::IsMember({"menage-a", "menage-b"}));
    perm->add_option("--n", n, "order for --family")->check(CLI::PositiveNumber);
    auto* perm_matrix = perm->add_option("--matrix", matrix, "rows separated by ';', e.g. \"0,1;1,0\"");
    perm_family->excludes(perm_matrix);
    perm->add_flag("--brute", brute, "also enumerate S_n and compare");

    auto* table = app.add_subcommand("table", "Regenerate a census table");
    table->add_option("family", family)
        ->required()
        ->check(CLI::IsMember({"menage-a", "menage-b", "excedance-k2"}));
    table->add_option("n_max", n_max)->capture_default_str()->check(CLI::PositiveNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* census = app.add_subcommand("census", "Split S_n by number of weak excedances and parity");
    census->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    census->add_option("--k", census_k, "only this number of weak excedances")->check(CLI::PositiveNumber);
    census->add_flag("--list", list, "list the permutations (needs --k)");
    census->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* check = app.add_subcommand("check", "Differential and property checks against the oracles");
    check->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    check->add_option("--inject-fault", fault)->check(CLI::IsMember({"none", "sign"}))->group("");

    auto* bench = app.add_subcommand("bench", "Time the closed form against elimination");
    bench->add_option("sizes", sizes, "comma-separated orders")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench->add_option("--method", bench_method)
        ->check(CLI::IsMember({"bareiss", "laplace"}))
        ->capture_default_str();
    bench->add_option("--k", bench_k)->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--l", bench_l)->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_option("--a", bench_a)->capture_default_str();
    bench->add_option("--b", bench_b)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        const Limits limits = Limits::from_env();
        if (*det) {
            const BandSpec s = make_spec(n, k, l, a, b);
            const ClosedForm form = det_closed_form(s);
            RingElement value;
            if (method == "closed") {
                value = form.expand();
            } else if (method == "recurrence") {
                if (s.lower() != 1 || s.upper() >= n) {
                    throw InvalidArgumentError("the recurrence needs l = 1 and k < n");
                }
                value = det_recurrence(n, s.upper(), s.a(), s.b());
            } else if (method == "laplace") {
                value = det_laplace(materialize(s), limits.laplace);
            } else {
                if (!s.a().is_integer()) {
                    throw InvalidArgumentError("bareiss needs integer a and b");
                }
                value = det_bareiss(materialize(s));
            }
            out << "det: " << value << "\n";
            out << "factored: " << form.to_string() << "\n";
            out << "case: " << describe_residue(s) << "\n";
            if (s.transposed()) {
                out << "normalized: l > k, determinant of the transpose\n";
            }
            out << "method: " << method << "\n";
            return ok;
        }
        if (*perm) {
            CharMatrix A;
            if (!matrix.empty()) {
                A = parse_char_matrix(matrix);
            } else if (!family.empty() && n > 0) {
                A = family == "menage-a" ? menage_a_matrix(n) : menage_b_matrix(n);
            } else {
                throw InvalidArgumentError("perm needs --matrix or --family with --n");
            }
            const ParityCount pc = parity_counts(A, limits);
            out << "per: " << pc.permanent << " (" << provenance_name(pc.permanent_source) << ")\n";
            out << "det: " << pc.determinant << " (" << provenance_name(pc.determinant_source) << ")\n";
            out << "even: " << pc.even << "\n";
            out << "odd: " << pc.odd << "\n";
            if (brute) {
                const ParityCount slow = brute_force_parity(A, limits.enumeration);
                out << "enumeration: " << (slow == pc ? "agrees" : "DISAGREES") << "\n";
                return slow == pc ? ok : check_failed;
            }
            return ok;
        }
        if (*table) {
            const Family f = family == "menage-a"   ? Family::menage_a
                             : family == "menage-b" ? Family::menage_b
                                                    : Family::excedance_k2;
            print_rows(out, census_table(f, n_max, limits), format);
            return ok;
        }
        if (*census) {
            if (list) {
                if (census_k == 0) {
                    throw InvalidArgumentError("--list needs --k");
                }
                for (const auto& p : permutations_with_weak_excedances(n, census_k, limits.enumeration)) {
                    out << join(p) << (permutation_sign(p) > 0 ? " even" : " odd") << "\n";
                }
                return ok;
            }
            const ExcedanceCensus c = excedance_census(n, limits);
            std::vector<CensusRow> rows;
            for (std::int64_t kk = 1; kk <= n; ++kk) {
                if (census_k != 0 && kk != census_k) {
                    continue;
                }
                const auto e = c.at(kk);
                CensusRow row{kk, e.total, e.difference, e.even, e.odd};
                check_row(row);
                rows.push_back(row);
            }
            if (format == "json") {
                for (const auto& r : rows) {
                    out << nlohmann::json{{"n", n},
                                          {"k", r.n},
                                          {"per", r.per.str()},
                                          {"det", r.det.str()},
                                          {"even", r.even.str()},
                                          {"odd", r.odd.str()}}
                               .dump()
                        << "\n";
                }
            } else {
                out << "n,k,per,det,even,odd\n";
                for (const auto& r : rows) {
                    out << n << "," << r.n << "," << r.per << "," << r.det << "," << r.even << "," << r.odd << "\n";
                }
            }
            return ok;
        }
        if (*check) {
            return cmd_check(level, fault, out, err);
        }
        if (*bench) {
            return cmd_bench(sizes, bench_method, bench_k, bench_l, bench_a, bench_b, out);
        }
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return guard;
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << "\n";
        return check_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace bandet::cli
