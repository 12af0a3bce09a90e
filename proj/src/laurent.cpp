#include "latcert/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace latcert {

namespace {

long fq_inv(long a, long q) {
    // extended Euclid; q prime, a != 0 mod q
    long t = 0, nt = 1, r = q, nr = a % q;
    while (nr != 0) {
        long quo = r / nr;
        t -= quo * nt;
        std::swap(t, nt);
        r -= quo * nr;
        std::swap(r, nr);
    }
    return ((t % q) + q) % q;
}

} // namespace

void LaurentApprox::normalize() {
    size_t lead = 0;
    while (lead < dig_.size() && dig_[lead] == 0) ++lead;
    if (lead > 0) {
        dig_.erase(dig_.begin(), dig_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    if (exact_) {
        while (!dig_.empty() && dig_.back() == 0) dig_.pop_back();
        if (dig_.empty()) val_ = 0;
    } else if (dig_.empty()) {
        val_ = 0;
    }
}

LaurentApprox LaurentApprox::exact_poly(long q, long val, std::vector<uint8_t> digits) {
    LaurentApprox a;
    a.q_ = q;
    a.exact_ = true;
    a.val_ = val;
    for (auto& d : digits)
        if (d >= q) fail(errc::invalid_argument, "digit out of range");
    a.dig_ = std::move(digits);
    a.normalize();
    return a;
}

LaurentApprox LaurentApprox::exact_zero(long q) { return exact_poly(q, 0, {}); }

LaurentApprox LaurentApprox::window(long q, long val, std::vector<uint8_t> digits) {
    if (digits.empty()) fail(errc::invalid_argument, "empty window");
    LaurentApprox a;
    a.q_ = q;
    a.val_ = val;
    a.end_ = val + static_cast<long>(digits.size());
    for (auto& d : digits)
        if (d >= q) fail(errc::invalid_argument, "digit out of range");
    a.dig_ = std::move(digits);
    a.normalize();
    return a;
}

LaurentApprox LaurentApprox::zero_window(long q, long end) {
    LaurentApprox a;
    a.q_ = q;
    a.end_ = end;
    return a;
}

long LaurentApprox::valuation() const {
    if (dig_.empty()) {
        if (exact_) fail(errc::zero_valuation, "valuation of exact zero");
        fail(errc::insufficient_precision, "valuation of a window that is zero at this precision");
    }
    return val_;
}

int LaurentApprox::digit_at(long pos) const {
    if (!exact_ && pos >= end_) fail(errc::insufficient_precision, "digit beyond known window");
    if (dig_.empty() || pos < val_) return 0;
    size_t i = static_cast<size_t>(pos - val_);
    return i < dig_.size() ? dig_[i] : 0;
}

LaurentApprox LaurentApprox::operator+(const LaurentApprox& o) const {
    if (q_ != o.q_) fail(errc::invalid_argument, "mixed base fields");
    long end = std::min(known_end(), o.known_end());
    long start = end;
    if (!dig_.empty()) start = std::min(start, val_);
    if (!o.dig_.empty()) start = std::min(start, o.val_);
    LaurentApprox r;
    r.q_ = q_;
    r.exact_ = end >= kInf;
    r.end_ = end;
    r.val_ = start;
    if (end > start && end < kInf)
        r.dig_.resize(static_cast<size_t>(end - start), 0);
    else if (end >= kInf) {
        long hi = start;
        if (!dig_.empty()) hi = std::max(hi, val_ + static_cast<long>(dig_.size()));
        if (!o.dig_.empty()) hi = std::max(hi, o.val_ + static_cast<long>(o.dig_.size()));
        r.dig_.resize(static_cast<size_t>(hi - start), 0);
    }
    auto acc = [&](const LaurentApprox& x) {
        for (size_t i = 0; i < x.dig_.size(); ++i) {
            long pos = x.val_ + static_cast<long>(i);
            if (pos >= start && pos - start < static_cast<long>(r.dig_.size()))
                r.dig_[static_cast<size_t>(pos - start)] =
                    static_cast<uint8_t>((r.dig_[static_cast<size_t>(pos - start)] + x.dig_[i]) % q_);
        }
    };
    acc(*this);
    acc(o);
    r.normalize();
    return r;
}

LaurentApprox LaurentApprox::operator-() const {
    LaurentApprox r = *this;
    for (auto& d : r.dig_)
        if (d != 0) d = static_cast<uint8_t>(q_ - d);
    return r;
}

LaurentApprox LaurentApprox::operator-(const LaurentApprox& o) const { return *this + (-o); }

LaurentApprox LaurentApprox::operator*(const LaurentApprox& o) const {
    if (q_ != o.q_) fail(errc::invalid_argument, "mixed base fields");
    if (dig_.empty() || o.dig_.empty()) {
        // |x| <= q^-a times |y| <= q^-b
        long a = dig_.empty() ? (exact_ ? kInf : end_) : val_;
        long b = o.dig_.empty() ? (o.exact_ ? kInf : o.end_) : o.val_;
        if (a >= kInf || b >= kInf) {
            if ((dig_.empty() && exact_) || (o.dig_.empty() && o.exact_))
                return exact_zero(q_); // exact zero absorbs
            return zero_window(q_, std::min(a, b) >= kInf ? kInf - 1 : a + b);
        }
        return zero_window(q_, a + b);
    }
    bool ex = exact_ && o.exact_;
    long prec;
    if (ex)
        prec = static_cast<long>(dig_.size() + o.dig_.size()) - 1;
    else
        prec = std::min(exact_ ? kInf : end_ - val_, o.exact_ ? kInf : o.end_ - o.val_);
    LaurentApprox r;
    r.q_ = q_;
    r.exact_ = ex;
    r.val_ = val_ + o.val_;
    r.end_ = r.val_ + prec;
    r.dig_.assign(static_cast<size_t>(prec), 0);
    for (size_t i = 0; i < dig_.size() && static_cast<long>(i) < prec; ++i) {
        if (dig_[i] == 0) continue;
        for (size_t j = 0; j < o.dig_.size() && static_cast<long>(i + j) < prec; ++j) {
            size_t k = i + j;
            r.dig_[k] = static_cast<uint8_t>((r.dig_[k] + dig_[i] * o.dig_[j]) % q_);
        }
    }
    r.normalize();
    return r;
}

LaurentApprox LaurentApprox::inverse(long prec) const {
    if (dig_.empty()) {
        if (exact_) fail(errc::invalid_argument, "inverse of zero");
        fail(errc::insufficient_precision, "inverse of a zero window");
    }
    if (exact_ && dig_.size() == 1) {
        LaurentApprox r = *this;
        r.val_ = -val_;
        r.dig_[0] = static_cast<uint8_t>(fq_inv(dig_[0], q_));
        return r;
    }
    if (prec < 0) {
        if (exact_) fail(errc::invalid_argument, "inverse of an exact polynomial needs a precision");
        prec = end_ - val_;
    }
    // power-series inversion of the unit part
    std::vector<uint8_t> w(static_cast<size_t>(prec), 0);
    long u0inv = fq_inv(dig_[0], q_);
    w[0] = static_cast<uint8_t>(u0inv);
    for (long k = 1; k < prec; ++k) {
        long s = 0;
        for (long i = 1; i <= k; ++i) {
            long ui = (static_cast<size_t>(i) < dig_.size()) ? dig_[static_cast<size_t>(i)] : 0;
            s = (s + ui * w[static_cast<size_t>(k - i)]) % q_;
        }
        w[static_cast<size_t>(k)] = static_cast<uint8_t>((u0inv * ((q_ - s) % q_)) % q_);
    }
    LaurentApprox r;
    r.q_ = q_;
    r.val_ = -val_;
    r.end_ = r.val_ + prec;
    r.dig_ = std::move(w);
    r.normalize();
    return r;
}

LaurentApprox LaurentApprox::truncated(long end) const {
    if (known_end() <= end) return *this;
    LaurentApprox r = *this;
    r.exact_ = false;
    r.end_ = end;
    if (r.dig_.empty()) return r;
    if (end <= r.val_) {
        r.dig_.clear();
        r.val_ = 0;
        return r;
    }
    if (static_cast<long>(r.dig_.size()) > end - r.val_)
        r.dig_.resize(static_cast<size_t>(end - r.val_));
    r.normalize();
    return r;
}

bool LaurentApprox::agree_on_overlap(const LaurentApprox& a, const LaurentApprox& b) {
    if (a.q_ != b.q_) return false;
    LaurentApprox d = a - b;
    return d.dig_.empty();
}

std::string LaurentApprox::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < dig_.size(); ++i) {
        if (dig_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        long e = val_ + static_cast<long>(i);
        if (dig_[i] != 1 || e == 0) os << static_cast<int>(dig_[i]);
        if (e != 0) {
            if (dig_[i] != 1) os << "*";
            os << "s";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    if (!exact_) os << " + O(s^" << end_ << ")";
    return os.str();
}

} // namespace latcert
