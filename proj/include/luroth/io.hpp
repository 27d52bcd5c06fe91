/// Plain-text, line-oriented file formats. Artifacts are small and
/// diff-ability matters for cross-prime comparison, so everything is decimal
/// text: residues for prime fields, num/den for rationals. Lines starting
/// with '#' carry provenance (tool version, command line) and are skipped by
/// the parsers; given identical inputs the writers are byte-stable.
#ifndef LUROTH_IO_HPP
#define LUROTH_IO_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "luroth/fp.hpp"
#include "luroth/invariants.hpp"
#include "luroth/rational.hpp"
#include "luroth/relations.hpp"

namespace luroth {

inline constexpr const char* kToolVersion = "0.1.0";

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct BatchHeader {
    std::string family;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime;   // empty = rational
    std::size_t count = 0;
};

/// Reads only the structured header of a quartic batch file.
BatchHeader read_batch_header(const std::string& path);

namespace io_detail {

std::vector<std::string> split_ws(const std::string& s);

inline std::string elt_to_string(const FpField&, const std::uint64_t& v) {
    return std::to_string(v);
}
inline std::string elt_to_string(const RatField&, const mpq_class& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline std::uint64_t elt_from_string(const FpField& fld, const std::string& s, const std::string& path,
                                     std::size_t line) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0' || errno != 0)
        throw ParseError(path, line, "bad field element '" + s + "'");
    return fld.from_int(v);
}
inline mpq_class elt_from_string(const RatField&, const std::string& s, const std::string& path,
                                 std::size_t line) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError(path, line, "bad rational '" + s + "'");
    }
}

}  // namespace io_detail

/// Quartic batch: provenance comments, then `family`, `seed`, `prime p` (or
/// `field rational`), `count`, then one quartic per line as 15 coefficients
/// in the fixed monomial order. Per-curve comments may precede curve lines.
template <class F>
void write_quartic_batch(std::ostream& os, const F& fld, const BatchHeader& h,
                         const std::vector<TernaryQuartic<F>>& qs,
                         const std::string& command = {},
                         const std::vector<std::string>& curve_notes = {}) {
    os << "# luroth quartic batch v" << kToolVersion << "\n";
    if (!command.empty()) os << "# command: " << command << "\n";
    os << "family " << h.family << "\n";
    os << "seed " << h.seed << "\n";
    if (h.prime)
        os << "prime " << *h.prime << "\n";
    else
        os << "field rational\n";
    os << "count " << qs.size() << "\n";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i < curve_notes.size() && !curve_notes[i].empty())
            os << "# " << curve_notes[i] << "\n";
        const auto& c = qs[i].coeffs();
        for (std::size_t j = 0; j < c.size(); ++j)
            os << (j ? " " : "") << io_detail::elt_to_string(fld, c[j]);
        os << "\n";
    }
}

template <class F>
std::vector<TernaryQuartic<F>> read_quartic_batch(const std::string& path, const F& fld,
                                                  BatchHeader* hdr_out = nullptr) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    BatchHeader h;
    std::vector<TernaryQuartic<F>> out;
    std::string line;
    std::size_t lineno = 0;
    bool have_count = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tok = io_detail::split_ws(line);
        if (tok.empty()) continue;
        if (!have_count) {
            if (tok[0] == "family" && tok.size() == 2) h.family = tok[1];
            else if (tok[0] == "seed" && tok.size() == 2) h.seed = std::stoull(tok[1]);
            else if (tok[0] == "prime" && tok.size() == 2) h.prime = std::stoull(tok[1]);
            else if (tok[0] == "field" && tok.size() == 2 && tok[1] == "rational") h.prime.reset();
            else if (tok[0] == "count" && tok.size() == 2) { h.count = std::stoull(tok[1]); have_count = true; }
            else throw ParseError(path, lineno, "unexpected header line '" + line + "'");
            continue;
        }
        if (tok.size() != 15)
            throw ParseError(path, lineno, "expected 15 coefficients, found " +
                                                std::to_string(tok.size()));
        TernaryQuartic<F> q(fld, 3, 4);
        for (std::size_t j = 0; j < 15; ++j)
            q.coeffs()[j] = io_detail::elt_from_string(fld, tok[j], path, lineno);
        out.push_back(std::move(q));
    }
    if (!have_count) throw ParseError(path, lineno, "missing count header");
    if (out.size() != h.count)
        throw ParseError(path, lineno, "count header says " + std::to_string(h.count) +
                                            " but file holds " + std::to_string(out.size()));
    if (hdr_out) *hdr_out = h;
    return out;
}

/// Expression file: `degree`, `modulus p` (or `rational`), `generators`
/// naming the fixed 13-generator order, then one record per term: 13
/// exponents and the coefficient, sorted by the fixed monomial order.
template <class F>
void write_expression(std::ostream& os, const F& fld, const InvariantExpression<F>& ex,
                      const std::string& command = {}, std::optional<std::uint64_t> seed = {}) {
    os << "# luroth invariant expression v" << kToolVersion << "\n";
    if (!command.empty()) os << "# command: " << command << "\n";
    if (seed) os << "# seed: " << *seed << "\n";
    os << "degree " << ex.degree << "\n";
    if (ex.modulus)
        os << "modulus " << *ex.modulus << "\n";
    else
        os << "rational\n";
    os << "generators";
    for (const auto* n : kInvariantNames) os << " " << n;
    os << "\n";
    for (const auto& [m, c] : ex.terms) {
        for (int g = 0; g < 13; ++g) os << static_cast<int>(m.e[g]) << " ";
        os << io_detail::elt_to_string(fld, c) << "\n";
    }
}

template <class F>
InvariantExpression<F> read_expression(const std::string& path, const F& fld) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    InvariantExpression<F> ex;
    std::string line;
    std::size_t lineno = 0;
    int stage = 0;   // expect degree, modulus, generators, then terms
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tok = io_detail::split_ws(line);
        if (tok.empty()) continue;
        if (stage == 0) {
            if (tok[0] != "degree" || tok.size() != 2)
                throw ParseError(path, lineno, "expected 'degree <n>'");
            ex.degree = std::stoi(tok[1]);
            stage = 1;
        } else if (stage == 1) {
            if (tok[0] == "modulus" && tok.size() == 2) ex.modulus = std::stoull(tok[1]);
            else if (tok[0] == "rational" && tok.size() == 1) ex.modulus.reset();
            else throw ParseError(path, lineno, "expected 'modulus <p>' or 'rational'");
            if constexpr (std::is_same_v<F, FpField>) {
                if (!ex.modulus || *ex.modulus != fld.modulus())
                    throw ParseError(path, lineno, "expression modulus does not match the field");
            } else {
                if (ex.modulus) throw ParseError(path, lineno, "rational field cannot read modular file");
            }
            stage = 2;
        } else if (stage == 2) {
            if (tok[0] != "generators" || tok.size() != 14)
                throw ParseError(path, lineno, "expected the 13-name generators line");
            for (int g = 0; g < 13; ++g)
                if (tok[g + 1] != kInvariantNames[g])
                    throw ParseError(path, lineno, "generator order mismatch at " + tok[g + 1]);
            stage = 3;
        } else {
            if (tok.size() != 14)
                throw ParseError(path, lineno, "expected 13 exponents and a coefficient");
            ExponentVector m;
            for (int g = 0; g < 13; ++g) {
                int e = std::stoi(tok[g]);
                if (e < 0 || e > 255) throw ParseError(path, lineno, "exponent out of range");
                m.e[g] = static_cast<std::uint8_t>(e);
            }
            auto c = io_detail::elt_from_string(fld, tok[13], path, lineno);
            if (m.weighted_degree() != ex.degree)
                throw ParseError(path, lineno, "term degree does not match the header");
            ex.terms.push_back({m, c});
        }
    }
    if (stage < 3) throw ParseError(path, lineno, "truncated expression file");
    return ex;
}

/// Probe report: the three dimensions plus new-relation listings in the
/// expression term format, with the I3*I27 pattern-match flag per relation.
template <class F>
void write_probe_report(std::ostream& os, const F& fld, const ProbeReport<F>& rep,
                        std::size_t sample_count, const std::string& command = {}) {
    os << "# luroth probe report v" << kToolVersion << "\n";
    if (!command.empty()) os << "# command: " << command << "\n";
    os << "degree " << rep.degree << "\n";
    if constexpr (std::is_same_v<F, FpField>) os << "modulus " << fld.modulus() << "\n";
    else os << "rational\n";
    os << "samples " << sample_count << "\n";
    os << "monomials " << rep.monomial_count << "\n";
    os << "generic_kernel " << rep.generic_kernel_dim << "\n";
    os << "locus_kernel " << rep.locus_kernel_dim << "\n";
    os << "new_relations " << rep.new_relations.size() << "\n";
    for (std::size_t i = 0; i < rep.new_relations.size(); ++i) {
        const auto& r = rep.new_relations[i];
        os << "relation " << i << " matches_i3_i27 " << (r.matches_i3_i27 ? "yes" : "no") << "\n";
        for (const auto& [m, c] : r.expression.terms) {
            os << "term ";
            for (int g = 0; g < 13; ++g) os << static_cast<int>(m.e[g]) << " ";
            os << io_detail::elt_to_string(fld, c) << "\n";
        }
    }
}

}  // namespace luroth

#endif
