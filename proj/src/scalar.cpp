#include "qpf/scalar.hpp"

#include <vector>

namespace qpf {

namespace {

// Dense coefficient vector of a Laurent scalar shifted to minimum exponent 0.
struct Dense {
    std::int64_t shift = 0;  // original minimum exponent
    std::vector<Rational> c; // c[i] = coefficient of q^(shift+i)

    static Dense from(const LaurentScalar& s) {
        Dense d;
        d.shift = s.min_exponent();
        d.c.assign(static_cast<std::size_t>(s.max_exponent() - d.shift) + 1, Rational(0));
        for (const auto& [e, r] : s.terms()) d.c[static_cast<std::size_t>(e - d.shift)] = r;
        return d;
    }

    std::size_t degree() const { return c.size() - 1; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    LaurentScalar to_scalar(std::int64_t extra_shift) const {
        LaurentScalar out;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) out.add_assign(LaurentScalar::rational(c[i]) * LaurentScalar::q_pow(shift + extra_shift + static_cast<std::int64_t>(i)));
        return out;
    }
};

// Remainder of a by b in Q[q]; b non-zero and trimmed.
std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

LaurentScalar laurent_divexact(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) throw std::domain_error("laurent_divexact: division by zero");
    if (a.is_zero()) return LaurentScalar();
    Dense da = Dense::from(a), db = Dense::from(b);
    da.trim();
    db.trim();
    if (da.c.size() < db.c.size())
        throw std::domain_error("laurent_divexact: not divisible");
    std::vector<Rational> quot(da.c.size() - db.c.size() + 1, Rational(0));
    // Schoolbook division from the top; exactness checked at the end.
    std::vector<Rational> rem = da.c;
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + db.degree()] / db.c.back();
        quot[k] = f;
        if (f != 0)
            for (std::size_t i = 0; i < db.c.size(); ++i) rem[k + i] -= f * db.c[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("laurent_divexact: not divisible");
    Dense dq;
    dq.shift = da.shift - db.shift;
    dq.c = std::move(quot);
    return dq.to_scalar(0);
}

LaurentScalar laurent_gcd(const LaurentScalar& a, const LaurentScalar& b) {
    auto normalize = [](const LaurentScalar& s) {
        if (s.is_zero()) return s;
        LaurentScalar out;
        std::int64_t lo = s.min_exponent();
        Rational lead = s.terms().rbegin()->second;
        for (const auto& [e, c] : s.terms())
            out.add_assign(LaurentScalar::rational(c / lead) * LaurentScalar::q_pow(e - lo));
        return out;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    std::vector<Rational> u = Dense::from(a).c, v = Dense::from(b).c;
    while (!u.empty() && u.back() == 0) u.pop_back();
    while (!v.empty() && v.back() == 0) v.pop_back();
    while (!v.empty()) {
        u = poly_rem(std::move(u), v);
        std::swap(u, v);
    }
    Dense d;
    d.shift = 0;
    d.c = std::move(u);
    return normalize(d.to_scalar(0));
}

}  // namespace qpf
