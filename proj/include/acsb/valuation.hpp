#ifndef ACSB_VALUATION_HPP
#define ACSB_VALUATION_HPP

// Extended integers Z ∪ {+∞} used as p-adic valuations. The valuation of 0 is
// +∞ and +∞ is absorbing under every arithmetic operation, so v(x*y) =
// v(x)+v(y) and v(x/y) = v(x)-v(y) stay literally true when zeros appear.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace acsb {

class Valuation {
  public:
    Valuation() : value_(0), infinite_(false) {}

    static Valuation finite(std::int64_t v) {
        Valuation r;
        r.value_ = v;
        return r;
    }
    static Valuation infinity() {
        Valuation r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }

    // Only valid on finite values.
    std::int64_t value() const {
        if (infinite_) throw std::logic_error("Valuation::value() on +infinity");
        return value_;
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }
    friend Valuation operator-(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ - b.value_);
    }
    // Scaling by a multiplicity (m copies of a factor).
    friend Valuation operator*(std::int64_t m, const Valuation& v) {
        if (v.infinite_) return infinity();
        return finite(m * v.value_);
    }

    Valuation& operator+=(const Valuation& o) { return *this = *this + o; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    // +∞ compares greater than every finite value.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    friend bool operator==(const Valuation& a, std::int64_t b) { return a == finite(b); }
    friend bool operator>=(const Valuation& a, std::int64_t b) { return a >= finite(b); }
    friend bool operator<(const Valuation& a, std::int64_t b) { return a < finite(b); }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        return os << v.str();
    }

  private:
    std::int64_t value_;
    bool infinite_;
};

} // namespace acsb

#endif
