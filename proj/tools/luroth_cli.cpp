// Command-line surface tying the pipeline together into reproducible runs:
//   find-luroth    degree-54 search, kernel checkpoints, expression file
//   invariants     the 13 generator values of quartics from a batch file
//   gen            quartic batch generation (generic/luroth/l2/l1/ciani/remark)
//   probe          relation probe of a sampled locus at a given degree
//   verify-ciani   factorization check L = lambda G^4 H^2 J on Ciani quartics
//   expand-ciani   exact expansion of G^4 H^2 J and the weighted census
//   interpolate-ciani   L on the Ciani family in the weighted monomial basis
// Exit status is 0 iff every checkpoint declared by the command passed.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "luroth/clebsch.hpp"
#include "luroth/crt.hpp"
#include "luroth/io.hpp"
#include "luroth/relations.hpp"

using namespace luroth;

namespace {

std::string join_args(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
    return os.str();
}

std::uint64_t check_prime(std::uint64_t p) {
    if (!is_prime_u64(p) || p < 3)
        throw CLI::ValidationError("--prime", std::to_string(p) + " is not an odd prime");
    return p;
}

std::uint64_t expression_modulus(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(is, line)) {
        auto tok = io_detail::split_ws(line);
        if (tok.size() == 2 && tok[0] == "modulus") return std::stoull(tok[1]);
        if (!tok.empty() && tok[0] == "rational")
            throw std::runtime_error(path + ": rational expression where a modular one is needed");
    }
    throw std::runtime_error(path + ": no modulus header");
}

struct FindLurothOpts {
    std::vector<std::uint64_t> primes = {2017};
    bool crt = false;
    std::uint64_t seed = 1;
    std::size_t generic = 1500;
    std::size_t luroth = 1500;
    std::string out = "L.dat";
};

int run_find_luroth(const FindLurothOpts& o, const std::string& cmdline) {
    std::vector<LurothSearchResult<FpField>> results;
    for (auto p : o.primes) {
        FpField F(check_prime(p));
        DixmierOhnoEvaluator<FpField> dix(F);
        auto res = find_luroth(dix, o.generic, o.luroth, o.seed);
        std::cout << "p=" << p << ": rank " << res.rank << ", dim N1 " << res.dim_n1
                  << ", dim N2 " << res.dim_n2 << ", support " << res.expression.support_size()
                  << "\n";
        std::string path = o.primes.size() == 1 ? o.out : o.out + ".p" + std::to_string(p);
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot write " + path);
        write_expression(os, F, res.expression, cmdline, o.seed);
        std::cout << "wrote " << path << "\n";
        results.push_back(std::move(res));
    }
    if (o.crt && o.primes.size() >= 2) {
        // per coefficient: CRT over all primes, bounded rational
        // reconstruction, and a stability check against the prefix product.
        auto mons = weighted_monomials(54);
        auto coeff_at = [&](const LurothSearchResult<FpField>& r,
                            const ExponentVector& m) -> std::uint64_t {
            for (const auto& [mm, c] : r.expression.terms)
                if (mm == m) return c;
            return 0;
        };
        std::size_t reconstructed = 0, stabilized = 0, united = 0;
        for (const auto& m : mons) {
            std::vector<std::pair<mpz_class, mpz_class>> rs, rs_prev;
            bool any = false;
            for (std::size_t i = 0; i < o.primes.size(); ++i) {
                auto c = coeff_at(results[i], m);
                any |= c != 0;
                rs.push_back({mpz_class(static_cast<unsigned long>(c)),
                              mpz_class(static_cast<unsigned long>(o.primes[i]))});
                if (i + 1 < o.primes.size()) rs_prev.push_back(rs.back());
            }
            if (!any) continue;
            ++united;
            auto [comb, mod] = crt_combine(rs);
            mpz_class bound;
            mpz_sqrt(bound.get_mpz_t(), mpz_class((mod - 1) / 2).get_mpz_t());
            auto rec = rational_reconstruct(comb, mod, bound);
            if (!rec) continue;
            ++reconstructed;
            for (std::size_t i = 0; i < o.primes.size(); ++i) {
                mpz_class pz(static_cast<unsigned long>(o.primes[i]));
                mpz_class dinv;
                if (mpz_invert(dinv.get_mpz_t(), rec->den.get_mpz_t(), pz.get_mpz_t()) == 0)
                    throw std::runtime_error("crt: denominator not invertible mod " +
                                             std::to_string(o.primes[i]));
                mpz_class r = (rec->num % pz) * dinv % pz;
                if (r < 0) r += pz;
                if (r != rs[i].first)
                    throw std::runtime_error("crt: reconstruction contradicts a residue");
            }
            if (rs_prev.size() >= 2) {
                auto [comb2, mod2] = crt_combine(rs_prev);
                mpz_class bound2;
                mpz_sqrt(bound2.get_mpz_t(), mpz_class((mod2 - 1) / 2).get_mpz_t());
                auto rec2 = rational_reconstruct(comb2, mod2, bound2);
                if (rec2 && rec2->num == rec->num && rec2->den == rec->den) ++stabilized;
            }
        }
        std::cout << "crt: " << united << " united coefficients, " << reconstructed
                  << " reconstruct within the trial bound, " << stabilized
                  << " stable across prime subsets\n"
                  << "note: the full rational result needs far more primes; add primes until"
                     " all coefficients stabilize\n";
    }
    bool ok = true;
    for (const auto& r : results)
        ok &= r.rank == 1165 && r.dim_n1 == 215 && r.dim_n2 == 216;
    return ok ? 0 : 1;
}

template <class F>
int print_invariants(const F& fld, const std::string& path) {
    auto qs = read_quartic_batch(path, fld);
    DixmierOhnoEvaluator<F> dix(fld);
    for (const auto& q : qs) {
        auto t = dix.evaluate(q);
        for (int i = 0; i < 13; ++i)
            std::cout << (i ? " " : "") << kInvariantNames[i] << "="
                      << io_detail::elt_to_string(fld, t[i]);
        std::cout << "\n";
    }
    return 0;
}

struct GenOpts {
    std::string family;
    std::uint64_t prime = 2017;
    bool rational = false;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    int retries = 32;
    std::string out = "batch.dat";
    std::string expr;
};

template <class F>
std::vector<TernaryQuartic<F>> gen_family(const F& fld, const GenOpts& o,
                                          std::vector<std::string>& notes,
                                          const DixmierOhnoEvaluator<F>* dix,
                                          const InvariantExpression<F>* L) {
    std::vector<TernaryQuartic<F>> qs;
    for (std::size_t i = 0; i < o.count; ++i) {
        if (o.family == "generic") {
            qs.push_back(random_generic_quartic(fld, o.seed, i));
        } else if (o.family == "luroth") {
            qs.push_back(random_luroth_quartic(fld, o.seed, i));
        } else if (o.family == "l2") {
            qs.push_back(l2_quartic(fld, o.seed, i));
        } else if (o.family == "ciani") {
            Rng rng = Rng::derive(o.seed, i ^ 0x5555555555555555ULL);
            CianiCoefficients<F> cc;
            for (auto& x : cc.v) x = random_element(fld, rng);
            qs.push_back(ciani(fld, cc));
        } else if (o.family == "remark") {
            qs.push_back(remark_quartic(fld, o.seed, i, o.retries));
        } else if (o.family == "l1") {
            auto r = generate_l1(*dix, *L, o.seed + i, o.retries);
            notes.push_back("curve " + std::to_string(i) + " seed " + std::to_string(o.seed + i) +
                            " attempts " + std::to_string(r.attempts));
            qs.push_back(std::move(r.quartic));
        } else {
            throw CLI::ValidationError("family", "unknown family " + o.family);
        }
    }
    return qs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reconstruction and probing of the degree-54 Luroth invariant"};
    app.require_subcommand(1);
    const std::string cmdline = join_args(argc, argv);

    FindLurothOpts fl;
    auto* c_fl = app.add_subcommand("find-luroth", "compute the degree-54 expression over F_p");
    c_fl->add_option("--prime", fl.primes, "prime modulus (repeatable)");
    c_fl->add_option("--primes", fl.primes, "comma-separated prime list")->delimiter(',');
    c_fl->add_flag("--crt", fl.crt, "combine per-prime runs; attempt rational reconstruction");
    c_fl->add_option("--seed", fl.seed, "RNG seed");
    c_fl->add_option("--generic", fl.generic, "generic batch size");
    c_fl->add_option("--luroth", fl.luroth, "pentalateral batch size");
    c_fl->add_option("--out", fl.out, "output expression file");

    std::string inv_path;
    auto* c_inv = app.add_subcommand("invariants", "print the 13 invariants of each quartic");
    c_inv->add_option("file", inv_path, "quartic batch file")->required();

    GenOpts go;
    auto* c_gen = app.add_subcommand("gen", "generate a quartic batch");
    c_gen->add_option("family", go.family, "generic | luroth | l2 | l1 | ciani | remark")->required();
    c_gen->add_option("--prime", go.prime, "prime modulus");
    c_gen->add_flag("--rational", go.rational, "rational coefficients instead of F_p");
    c_gen->add_option("--seed", go.seed, "RNG seed");
    c_gen->add_option("--count", go.count, "number of quartics");
    c_gen->add_option("--retries", go.retries, "per-curve retry bound (l1, remark)");
    c_gen->add_option("--out", go.out, "output batch file");
    c_gen->add_option("--expr", go.expr,
                      "expression file used to validate l1 curves (computed when omitted)");

    struct {
        std::string samples;
        int degree = 24;
        std::uint64_t seed = 2;
        std::string out;
    } po;
    auto* c_probe = app.add_subcommand("probe", "locus relation probe at a degree");
    c_probe->add_option("samples", po.samples, "quartic batch file")->required();
    c_probe->add_option("--degree", po.degree, "weighted degree")->required();
    c_probe->add_option("--seed", po.seed, "seed for the generic comparison batch");
    c_probe->add_option("--out", po.out, "report file");

    struct {
        std::string expr;
        std::size_t trials = 200;
        std::uint64_t seed = 3;
    } vo;
    auto* c_ver = app.add_subcommand("verify-ciani", "check L = lambda G^4 H^2 J on Ciani quartics");
    c_ver->add_option("expression", vo.expr, "expression file")->required();
    c_ver->add_option("--trials", vo.trials, "number of nondegenerate tuples");
    c_ver->add_option("--seed", vo.seed, "RNG seed");

    std::string eco;
    auto* c_exp = app.add_subcommand("expand-ciani", "expand G^4 H^2 J; print the weighted census");
    c_exp->add_option("--out", eco, "polynomial output file");

    struct {
        std::string expr;
        std::size_t samples = 3600;
        std::uint64_t seed = 4;
        std::string out;
    } in_;
    auto* c_int = app.add_subcommand("interpolate-ciani",
                                     "solve for L on the Ciani family in the weighted basis");
    c_int->add_option("expression", in_.expr, "expression file")->required();
    c_int->add_option("--samples", in_.samples, "sample count (must exceed 3439)");
    c_int->add_option("--seed", in_.seed, "RNG seed");
    c_int->add_option("--out", in_.out, "polynomial output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_fl) {
            for (auto p : fl.primes) check_prime(p);
            return run_find_luroth(fl, cmdline);
        }
        if (*c_inv) {
            auto h = read_batch_header(inv_path);
            if (h.prime) return print_invariants(FpField(check_prime(*h.prime)), inv_path);
            return print_invariants(RatField{}, inv_path);
        }
        if (*c_gen) {
            std::vector<std::string> notes;
            if (go.rational) {
                if (go.family == "l1")
                    throw CLI::ValidationError(
                        "--rational", "l1 validation needs a prime-field expression");
                RatField Q;
                auto qs = gen_family<RatField>(Q, go, notes, nullptr, nullptr);
                std::ofstream os(go.out);
                if (!os) throw std::runtime_error("cannot write " + go.out);
                write_quartic_batch(os, Q, BatchHeader{go.family, go.seed, std::nullopt, qs.size()},
                                    qs, cmdline, notes);
            } else {
                FpField F(check_prime(go.prime));
                DixmierOhnoEvaluator<FpField> dix(F);
                InvariantExpression<FpField> L;
                if (go.family == "l1") {
                    if (!go.expr.empty()) {
                        L = read_expression(go.expr, F);
                    } else {
                        std::cout << "no --expr given; running find-luroth at p=" << go.prime
                                  << " first\n";
                        L = find_luroth(dix, 1500, 1500, 1).expression;
                    }
                }
                auto qs = gen_family(F, go, notes, &dix, &L);
                std::ofstream os(go.out);
                if (!os) throw std::runtime_error("cannot write " + go.out);
                write_quartic_batch(os, F, BatchHeader{go.family, go.seed, go.prime, qs.size()}, qs,
                                    cmdline, notes);
            }
            std::cout << "wrote " << go.out << " (" << go.count << " quartics)\n";
            return 0;
        }
        if (*c_probe) {
            auto h = read_batch_header(po.samples);
            if (!h.prime) throw std::runtime_error("probe expects a prime-field batch");
            FpField F(check_prime(*h.prime));
            DixmierOhnoEvaluator<FpField> dix(F);
            auto qs = read_quartic_batch(po.samples, F);
            auto rep = probe_locus(dix, qs, po.degree, po.seed);
            std::cout << "degree " << rep.degree << ": monomials " << rep.monomial_count
                      << ", generic kernel " << rep.generic_kernel_dim << ", locus kernel "
                      << rep.locus_kernel_dim << ", new relations " << rep.new_relations.size()
                      << "\n";
            for (std::size_t i = 0; i < rep.new_relations.size(); ++i)
                if (rep.new_relations[i].matches_i3_i27)
                    std::cout << "relation " << i << " equals I3*I27 modulo the generic kernel\n";
            if (!po.out.empty()) {
                std::ofstream os(po.out);
                if (!os) throw std::runtime_error("cannot write " + po.out);
                write_probe_report(os, F, rep, qs.size(), cmdline);
                std::cout << "wrote " << po.out << "\n";
            }
            return 0;
        }
        if (*c_ver) {
            FpField F(check_prime(expression_modulus(vo.expr)));
            DixmierOhnoEvaluator<FpField> dix(F);
            auto L = read_expression(vo.expr, F);
            auto v = verify_ciani(dix, L, vo.trials, vo.seed);
            if (v.ok) {
                std::cout << "verified on " << v.trials << " trials, lambda = " << v.lambda << "\n";
                return 0;
            }
            std::cout << "FAILED";
            if (v.witness) {
                std::cout << " at tuple";
                for (auto x : v.witness->v) std::cout << " " << x;
            } else {
                std::cout << " (degenerate input expression)";
            }
            std::cout << "\n";
            return 1;
        }
        if (*c_exp) {
            auto e = expand_ciani_product();
            auto mons = ciani_weighted_monomials();
            std::cout << "G^4 H^2 J support: " << e.support_size() << " monomials\n";
            std::cout << "weighted degree-54 census in (a..f): " << mons.size() << "\n";
            if (!eco.empty()) {
                std::ofstream os(eco);
                if (!os) throw std::runtime_error("cannot write " + eco);
                os << "# luroth ciani expansion v" << kToolVersion << "\n# command: " << cmdline
                   << "\nvariables a b c d e f\nterms " << e.support_size() << "\n";
                RatField Q;
                for (const auto& [k, c] : e.terms()) {
                    for (auto x : k) os << static_cast<int>(x) << " ";
                    os << io_detail::elt_to_string(Q, c) << "\n";
                }
                std::cout << "wrote " << eco << "\n";
            }
            return (e.support_size() == 1695 && mons.size() == 3439) ? 0 : 1;
        }
        if (*c_int) {
            FpField F(check_prime(expression_modulus(in_.expr)));
            DixmierOhnoEvaluator<FpField> dix(F);
            auto L = read_expression(in_.expr, F);
            auto res = interpolate_ciani(dix, L, in_.samples, in_.seed);
            std::cout << "interpolation rank " << res.rank << " / " << res.basis_size
                      << (res.consistent ? " (consistent)" : " (INCONSISTENT)") << ", support "
                      << res.poly.support_size() << "\n";
            if (!in_.out.empty() && res.consistent && res.rank == res.basis_size) {
                std::ofstream os(in_.out);
                if (!os) throw std::runtime_error("cannot write " + in_.out);
                os << "# luroth ciani interpolation v" << kToolVersion << "\n# command: " << cmdline
                   << "\nmodulus " << F.modulus() << "\nvariables a b c d e f\nterms "
                   << res.poly.support_size() << "\n";
                for (const auto& [k, c] : res.poly.terms()) {
                    for (auto x : k) os << static_cast<int>(x) << " ";
                    os << c << "\n";
                }
                std::cout << "wrote " << in_.out << "\n";
            }
            return (res.consistent && res.rank == res.basis_size) ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const StageError& e) {
        std::cerr << "pipeline error at stage '" << e.stage() << "': " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
