#include "crsym/rational.hpp"

#include <cctype>

namespace crsym {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax_error: return "SyntaxError";
        case Errc::not_real: return "NotReal";
        case Errc::w_illegal: return "WIllegal";
        case Errc::antiholomorphic_coefficient: return "AntiholomorphicCoefficient";
        case Errc::malformed_input: return "MalformedInput";
        case Errc::not_divisible: return "NotDivisible";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::both_zero: return "BothZero";
        case Errc::not_homogenizable: return "NotHomogenizable";
        case Errc::pluriharmonic_terms: return "PluriharmonicTerms";
        case Errc::not_homogeneous: return "NotHomogeneous";
        case Errc::infinite_type: return "InfiniteType";
        case Errc::zero_polynomial: return "ZeroPolynomial";
        case Errc::invalid_weight: return "InvalidWeight";
        case Errc::zero_field: return "ZeroField";
        case Errc::non_rigid_input: return "NonRigidInput";
        case Errc::not_positive_weight: return "NotPositiveWeight";
        case Errc::not_a_rotation: return "NotARotation";
        case Errc::rank_exceeds_one: return "RankExceedsOne";
        case Errc::non_terminating: return "NonTerminating";
        case Errc::degenerate_model: return "DegenerateModel";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::pluriharmonic_result: return "PluriharmonicResult";
        case Errc::zero_result: return "ZeroResult";
        case Errc::zero_jacobian: return "ZeroJacobian";
        case Errc::infeasible_budget: return "InfeasibleBudget";
        case Errc::no_rotation: return "NoRotation";
        case Errc::io_error: return "IoError";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

std::string ParseDiagnostic::render() const {
    std::string s = "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        s += " (expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (k) s += ", ";
            s += expected[k];
        }
        s += ")";
    }
    return s;
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw Error(Errc::malformed_input, "empty rational literal");
    // mpq_set_str accepts leading '-' and "p/q"; reject anything else early
    // so that e.g. "1.5" fails loudly.
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw Error(Errc::malformed_input, "bad rational literal: " + s);
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(Errc::malformed_input, "bad rational literal: " + s);
    if (r.get_den() == 0)
        throw Error(Errc::malformed_input, "zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

mpz_class rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

mpz_class int_lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Gauss Gauss::operator/(const Gauss& o) const {
    if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    Rat n = o.re * o.re + o.im * o.im;
    return Gauss((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
}

std::string Gauss::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (re != 0) s = rat_str(re);
    if (im != 0) {
        std::string imag;
        if (im == 1)
            imag = "i";
        else if (im == -1)
            imag = "-i";
        else
            imag = rat_str(im) + "*i";
        if (s.empty()) {
            s = imag;
        } else if (imag[0] == '-') {
            s += "-" + imag.substr(1);
        } else {
            s += "+" + imag;
        }
    }
    return s;
}

Gauss gauss_parse(const std::string& s) {
    if (s.empty()) throw Error(Errc::malformed_input, "empty coefficient");
    // Split into real and imaginary chunks at a '+'/'-' that is not the
    // leading sign.
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] == '+' || s[k] == '-') {
            parts.push_back(s.substr(start, k - start));
            start = (s[k] == '+') ? k + 1 : k;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw Error(Errc::malformed_input, "bad coefficient: " + s);

    Gauss out;
    for (const std::string& piece : parts) {
        if (piece.empty()) throw Error(Errc::malformed_input, "bad coefficient: " + s);
        bool imag = false;
        std::string lit = piece;
        if (lit.size() >= 1 && lit.back() == 'i') {
            imag = true;
            lit.pop_back();
            if (!lit.empty() && lit.back() == '*') lit.pop_back();
            if (lit.empty() || lit == "-" || lit == "+") lit += "1";
        }
        Rat r = rat_parse(lit);
        if (imag)
            out.im += r;
        else
            out.re += r;
    }
    return out;
}

} // namespace crsym
