#include "tough/ratio.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace tough {

Ratio Ratio::finite(std::int64_t p, std::int64_t q)
{
    if (p < 0) throw std::invalid_argument("Ratio: negative numerator");
    if (q <= 0) throw std::invalid_argument("Ratio: denominator must be positive");
    Ratio r;
    std::int64_t g = std::gcd(p, q);
    r.p_ = p / g;
    r.q_ = q / g;
    return r;
}

std::int64_t Ratio::ceil_of_double() const
{
    if (infinite_) throw std::domain_error("Ratio: ceiling of infinity");
    std::int64_t two_p = 0;
    std::int64_t sum = 0;
    if (__builtin_mul_overflow(p_, std::int64_t{2}, &two_p) || __builtin_add_overflow(two_p, q_ - 1, &sum))
        throw RatioOverflow("Ratio: overflow in ceil(2p/q)");
    return sum / q_;
}

Ratio Ratio::times(std::int64_t k) const
{
    if (k < 0) throw std::invalid_argument("Ratio: negative factor");
    if (infinite_) {
        if (k == 0) throw std::domain_error("Ratio: 0 * inf");
        return infinite();
    }
    std::int64_t g = std::gcd(k, q_);
    std::int64_t p = 0;
    if (__builtin_mul_overflow(p_, k / g, &p)) throw RatioOverflow("Ratio: overflow in product");
    return finite(p, q_ / g);
}

Ratio Ratio::divided_into(std::int64_t k) const
{
    if (k < 0) throw std::invalid_argument("Ratio: negative dividend");
    if (infinite_) return Ratio{};
    if (p_ == 0) throw std::domain_error("Ratio: division by zero");
    std::int64_t g = std::gcd(k, p_);
    std::int64_t p = 0;
    if (__builtin_mul_overflow(k / g, q_, &p)) throw RatioOverflow("Ratio: overflow in quotient");
    return finite(p, p_ / g);
}

std::string Ratio::to_string() const
{
    if (infinite_) return "inf";
    return std::to_string(p_) + "/" + std::to_string(q_);
}

namespace {

std::int64_t parse_int(std::string_view s)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("Ratio: malformed integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Ratio Ratio::parse(const std::string& text)
{
    if (text == "inf") return infinite();
    auto slash = text.find('/');
    if (slash == std::string::npos) return finite(parse_int(text), 1);
    std::string_view view(text);
    return finite(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

}  // namespace tough
