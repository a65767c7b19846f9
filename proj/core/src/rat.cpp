#include "odlin/rat.hpp"

#include <cctype>

namespace odlin {

Rat::Rat(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw input_error("division by zero");
    v_ /= o.v_;
    return *this;
}

long Rat::to_long() const {
    if (!is_integer()) throw input_error("expected an integer, got " + str());
    mpz_class n = num();
    if (!n.fits_slong_p()) throw input_error("integer out of range: " + str());
    return n.get_si();
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

namespace {

// Sign prefix plus digits; the returned view has any '+' stripped, since
// mpz_set_str accepts only '-'.
bool valid_int_token(std::string& s) {
    if (s.empty()) return false;
    if (s[0] == '+') s.erase(0, 1);
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        std::string num = text;
        if (!valid_int_token(num)) throw input_error("malformed rational: '" + text + "'");
        return Rat(mpq_class(mpz_class(num)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw input_error("malformed rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw input_error("zero denominator: '" + text + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rat(q);
}

}  // namespace odlin
