#include "terw/rational.hpp"

#include <cctype>

#include "terw/errors.hpp"

namespace terw {

Rational rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { throw DomainError("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    const auto is_int = [&](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num_part = text.substr(0, slash);
    if (!is_int(num_part)) bad();
    Integer num(std::string(num_part), 10);
    Integer den(1);
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        if (!is_int(den_part)) bad();
        den = Integer(std::string(den_part), 10);
        if (den == 0) bad();
    }
    return rat(num, den);
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace terw
