#include "sl2pf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sl2pf {

namespace {

constexpr std::size_t kKaratsubaThreshold = 32;  // schoolbook below this
constexpr std::size_t kTaskThreshold = 4096;     // omp tasks above this
constexpr int kMaxTaskDepth = 3;

using CoeffVec = std::vector<Fq>;

// out[k] = sum_{i+j=k} a[i]*b[j], column-wise. The prime-field path defers
// reduction: every partial sum fits in 64 bits for any q <= Field::kMaxQ and
// desk-scale lengths.
CoeffVec school(const Field& F, const Fq* a, std::size_t la, const Fq* b, std::size_t lb) {
    CoeffVec out(la + lb - 1, 0);
    if (F.n() == 1) {
        const std::uint64_t p = static_cast<std::uint64_t>(F.p());
        for (std::size_t k = 0; k < out.size(); ++k) {
            std::size_t i0 = k >= lb ? k - lb + 1 : 0;
            std::size_t i1 = std::min(k, la - 1);
            std::uint64_t acc = 0;
            for (std::size_t i = i0; i <= i1; ++i)
                acc += static_cast<std::uint64_t>(a[i]) * b[k - i];
            out[k] = static_cast<Fq>(acc % p);
        }
    } else {
        for (std::size_t k = 0; k < out.size(); ++k) {
            std::size_t i0 = k >= lb ? k - lb + 1 : 0;
            std::size_t i1 = std::min(k, la - 1);
            Fq acc = 0;
            for (std::size_t i = i0; i <= i1; ++i) acc = F.add(acc, F.mul(a[i], b[k - i]));
            out[k] = acc;
        }
    }
    return out;
}

void add_into(const Field& F, CoeffVec& dst, const CoeffVec& src, std::size_t offset) {
    if (dst.size() < src.size() + offset) dst.resize(src.size() + offset, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + offset] = F.add(dst[i + offset], src[i]);
}

void sub_into(const Field& F, CoeffVec& dst, const CoeffVec& src, std::size_t offset) {
    if (dst.size() < src.size() + offset) dst.resize(src.size() + offset, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + offset] = F.sub(dst[i + offset], src[i]);
}

CoeffVec add_vec(const Field& F, const Fq* a, std::size_t la, const Fq* b, std::size_t lb) {
    CoeffVec r(std::max(la, lb), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Fq x = i < la ? a[i] : 0;
        Fq y = i < lb ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    return r;
}

CoeffVec kmul(const Field& F, const Fq* a, std::size_t la, const Fq* b, std::size_t lb, bool tasks,
              int depth) {
    if (la == 0 || lb == 0) return {};
    if (std::min(la, lb) <= kKaratsubaThreshold) return school(F, a, la, b, lb);

    const std::size_t h = (std::max(la, lb) + 1) / 2;
    if (la <= h || lb <= h) {
        // unbalanced: split only the longer operand
        const Fq* lo = a;
        std::size_t llo = la;
        const Fq* sh = b;
        std::size_t lsh = lb;
        if (la < lb) {
            lo = b; llo = lb; sh = a; lsh = la;
        }
        CoeffVec z0 = kmul(F, lo, h, sh, lsh, tasks, depth + 1);
        CoeffVec z1 = kmul(F, lo + h, llo - h, sh, lsh, tasks, depth + 1);
        CoeffVec out(la + lb - 1, 0);
        add_into(F, out, z0, 0);
        add_into(F, out, z1, h);
        out.resize(la + lb - 1);
        return out;
    }

    const std::size_t la1 = la - h, lb1 = lb - h;
    CoeffVec z0, z1, z2;
    CoeffVec sa = add_vec(F, a, h, a + h, la1);
    CoeffVec sb = add_vec(F, b, h, b + h, lb1);

#ifdef _OPENMP
    if (tasks && depth < kMaxTaskDepth && std::min(la, lb) >= kTaskThreshold) {
#pragma omp task shared(z0)
        z0 = kmul(F, a, h, b, h, tasks, depth + 1);
#pragma omp task shared(z2)
        z2 = kmul(F, a + h, la1, b + h, lb1, tasks, depth + 1);
        z1 = kmul(F, sa.data(), sa.size(), sb.data(), sb.size(), tasks, depth + 1);
#pragma omp taskwait
    } else
#endif
    {
        z0 = kmul(F, a, h, b, h, tasks, depth + 1);
        z2 = kmul(F, a + h, la1, b + h, lb1, tasks, depth + 1);
        z1 = kmul(F, sa.data(), sa.size(), sb.data(), sb.size(), tasks, depth + 1);
    }

    sub_into(F, z1, z0, 0);
    sub_into(F, z1, z2, 0);

    CoeffVec out(la + lb - 1, 0);
    add_into(F, out, z0, 0);
    add_into(F, out, z1, h);
    add_into(F, out, z2, 2 * h);
    out.resize(la + lb - 1);
    return out;
}

CoeffVec mul_dispatch(const Field& F, const Fq* a, std::size_t la, const Fq* b, std::size_t lb) {
#ifdef _OPENMP
    if (std::min(la, lb) >= kTaskThreshold && omp_get_max_threads() > 1 && !omp_in_parallel()) {
        CoeffVec r;
#pragma omp parallel
#pragma omp single
        r = kmul(F, a, la, b, lb, true, 0);
        return r;
    }
#endif
    return kmul(F, a, la, b, lb, false, 0);
}

}  // namespace

Poly Poly::constant(FieldPtr f, Fq c) {
    Poly r(std::move(f));
    if (c != 0) r.c_.push_back(c);
    return r;
}

Poly Poly::from_int(FieldPtr f, long v) {
    Fq c = f->from_int(v);
    return constant(std::move(f), c);
}

Poly Poly::monomial(FieldPtr f, int k, Fq c) {
    Poly r(std::move(f));
    if (c != 0) {
        r.c_.assign(static_cast<std::size_t>(k) + 1, 0);
        r.c_.back() = c;
    }
    return r;
}

Fq Poly::eval(Fq x) const {
    Fq acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator-() const {
    Poly r(f_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->neg(c_[i]);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*f_, *o.f_);
    Poly r(f_);
    r.c_ = add_vec(*f_, c_.data(), c_.size(), o.c_.data(), o.c_.size());
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*f_, *o.f_);
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        Fq x = i < c_.size() ? c_[i] : 0;
        Fq y = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = f_->sub(x, y);
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*f_, *o.f_);
    Poly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.c_ = mul_dispatch(*f_, c_.data(), c_.size(), o.c_.data(), o.c_.size());
    r.trim();
    return r;
}

Poly Poly::mul_scalar(Fq s) const {
    Poly r(f_);
    if (s == 0 || is_zero()) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], s);
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    Poly r(f_);
    r.c_.assign(static_cast<std::size_t>(k), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    require(!is_zero(), Errc::DivisionByZero, "monic of zero");
    return mul_scalar(f_->inv(lc()));
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

Poly poly_mul_reference(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_ptr());
    return Poly(a.field_ptr(),
                school(a.field(), a.coeffs().data(), a.coeffs().size(), b.coeffs().data(),
                       b.coeffs().size()));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    require(!g.is_zero(), Errc::DivisionByZero, "division by zero polynomial");
    const Field& F = f.field();
    if (f.degree() < g.degree()) return {Poly::zero(f.field_ptr()), f};

    std::vector<Fq> rem = f.coeffs();
    const std::vector<Fq>& d = g.coeffs();
    const Fq lead_inv = F.inv(g.lc());
    const std::size_t dg = d.size() - 1;
    std::vector<Fq> quo(rem.size() - dg, 0);
    for (std::size_t i = rem.size(); i-- > dg;) {
        Fq c = F.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quo[i - dg] = c;
        std::size_t off = i - dg;
        for (std::size_t j = 0; j + 1 < d.size(); ++j) rem[off + j] = F.sub(rem[off + j], F.mul(c, d[j]));
        rem[i] = 0;
    }
    rem.resize(dg);
    return {Poly(f.field_ptr(), std::move(quo)), Poly(f.field_ptr(), std::move(rem))};
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    require(r.is_zero(), Errc::InexactDivision, "division left a remainder");
    return q;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    require(!(f.is_zero() && g.is_zero()), Errc::BothZero, "gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

XgcdResult poly_xgcd(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    require(!(f.is_zero() && g.is_zero()), Errc::BothZero, "xgcd(0, 0)");
    FieldPtr fp = f.field_ptr();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(fp), s1 = Poly::zero(fp);
    Poly t0 = Poly::zero(fp), t1 = Poly::one(fp);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    Fq u = fp->inv(r0.lc());
    return {r0.mul_scalar(u), s0.mul_scalar(u), t0.mul_scalar(u)};
}

namespace {

Poly reversed(const Poly& f, int len) {
    // coefficients of f read backwards from degree len-1
    std::vector<Fq> c(static_cast<std::size_t>(len), 0);
    for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = f.coeff(len - 1 - i);
    return Poly(f.field_ptr(), std::move(c));
}

Poly truncated(const Poly& f, int len) {
    std::vector<Fq> c(f.coeffs().begin(),
                      f.coeffs().begin() + std::min<std::size_t>(f.coeffs().size(),
                                                                 static_cast<std::size_t>(len)));
    return Poly(f.field_ptr(), std::move(c));
}

// Series inverse of f (f(0) != 0) to the requested precision, by Newton
// iteration g <- g(2 - f g).
Poly series_inverse(const Poly& f, int precision) {
    FieldPtr fp = f.field_ptr();
    Poly g = Poly::constant(fp, fp->inv(f.coeff(0)));
    int prec = 1;
    Poly two = Poly::from_int(fp, 2);
    while (prec < precision) {
        prec = std::min(precision, 2 * prec);
        Poly fg = truncated(truncated(f, prec) * g, prec);
        g = truncated(g * (two - fg), prec);
    }
    return g;
}

}  // namespace

ModCtx::ModCtx(Poly modulus) : m_(std::move(modulus)), minv_(m_.field_ptr()) {
    require(!m_.is_zero(), Errc::DivisionByZero, "zero modulus");
    if (m_.degree() >= 1) {
        Poly rev = reversed(m_, m_.degree() + 1);
        minv_ = series_inverse(rev, std::max(1, m_.degree()));
    }
}

Poly ModCtx::reduce(const Poly& f) const {
    const int d = m_.degree();
    if (d == 0) return Poly::zero(f.field_ptr());
    if (f.degree() < d) return f;
    const int k = f.degree() - d;  // quotient degree
    if (k + 1 > d) return divrem(f, m_).second;  // beyond cached precision
    Poly frev = reversed(f, f.degree() + 1);
    Poly qrev = truncated(truncated(frev, k + 1) * truncated(minv_, k + 1), k + 1);
    Poly q = reversed(qrev, k + 1);
    std::vector<Fq> low(static_cast<std::size_t>(d), 0);
    Poly qm = q * m_;
    const Field& F = f.field();
    for (int i = 0; i < d; ++i) low[static_cast<std::size_t>(i)] = F.sub(f.coeff(i), qm.coeff(i));
    return Poly(f.field_ptr(), std::move(low));
}

Poly ModCtx::powmod(const Poly& base, const BigInt& exp) const {
    require(exp >= 0, Errc::InvalidD, "negative exponent");
    FieldPtr fp = base.field_ptr();
    if (m_.degree() == 0) return Poly::zero(fp);
    Poly acc = Poly::one(fp);
    if (exp == 0) return reduce(acc);
    Poly b = reduce(base);
    BigInt e = exp;
    while (e > 0) {
        if ((e & 1) != 0) acc = acc.is_one() ? b : mulmod(acc, b);
        e >>= 1;
        if (e > 0) b = mulmod(b, b);
    }
    return acc;
}

Poly powmod(const Poly& base, const BigInt& exp, const Poly& modulus) {
    ModCtx ctx(modulus);
    return ctx.powmod(base, exp);
}

Poly poly_pow(const Poly& base, unsigned long exp) {
    Poly acc = Poly::one(base.field_ptr());
    if (exp == 0) return acc;
    Poly b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1ul) acc = acc * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return acc;
}

Poly poly_pow_guarded(const Poly& base, const BigInt& exp, long degree_cap) {
    require(exp >= 0, Errc::InvalidD, "negative exponent");
    if (base.is_zero()) return exp == 0 ? Poly::one(base.field_ptr()) : base;
    if (base.is_constant()) {
        Fq c = base.field().pow(base.constant_part(), exp);
        return Poly::constant(base.field_ptr(), c);
    }
    BigInt deg = BigInt(base.degree()) * exp;
    require(deg <= degree_cap, Errc::DegreeCapExceeded,
            "power of degree " + deg.str() + " exceeds cap " + std::to_string(degree_cap));
    return poly_pow(base, static_cast<unsigned long>(exp));
}

bool is_constant(const Poly& f) { return f.is_constant(); }
Fq constant_part(const Poly& f) { return f.constant_part(); }

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Fq c = coeff(i);
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << f_->elem_to_string(c);
        } else {
            if (c != 1) os << f_->elem_to_string(c) << '*';
            os << 'T';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Poly Poly::parse(FieldPtr f, const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    require(!s.empty(), Errc::ParseError, "empty polynomial text");

    std::vector<std::string> terms;
    std::string cur;
    int bracket = 0;
    for (char ch : s) {
        if (ch == '[') ++bracket;
        if (ch == ']') --bracket;
        if (ch == '+' && bracket == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    terms.push_back(cur);

    Poly acc = Poly::zero(f);
    for (const std::string& term : terms) {
        require(!term.empty(), Errc::ParseError, "empty term in '" + text + "'");
        std::string coeff_text;
        int power = 0;
        std::size_t tpos = term.find('T');
        if (tpos == std::string::npos) {
            coeff_text = term;
        } else {
            coeff_text = term.substr(0, tpos);
            if (!coeff_text.empty()) {
                require(coeff_text.back() == '*', Errc::ParseError,
                        "expected '*' before T in '" + term + "'");
                coeff_text.pop_back();
                require(!coeff_text.empty(), Errc::ParseError, "dangling '*' in '" + term + "'");
            }
            std::string rest = term.substr(tpos + 1);
            if (rest.empty()) {
                power = 1;
            } else {
                require(rest.front() == '^', Errc::ParseError, "expected '^' in '" + term + "'");
                rest.erase(rest.begin());
                require(!rest.empty() &&
                            std::all_of(rest.begin(), rest.end(),
                                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }),
                        Errc::ParseError, "bad exponent in '" + term + "'");
                power = std::stoi(rest);
            }
        }
        Fq c = coeff_text.empty() ? f->one() : f->elem_from_string(coeff_text);
        acc = acc + Poly::monomial(f, power, c);
    }
    return acc;
}

Poly Poly::random_exact_degree(FieldPtr f, int deg, Rng& rng) {
    if (deg < 0) return Poly::zero(f);
    std::vector<Fq> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Fq>(rng.below(static_cast<std::uint64_t>(f->q())));
    c.back() = static_cast<Fq>(1 + rng.below(static_cast<std::uint64_t>(f->q() - 1)));
    return Poly(f, std::move(c));
}

Poly Poly::random_at_most(FieldPtr f, int deg, Rng& rng) {
    if (deg < 0) return Poly::zero(f);
    std::vector<Fq> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<Fq>(rng.below(static_cast<std::uint64_t>(f->q())));
    return Poly(f, std::move(c));
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    if (f.is_zero()) return f;
    if (f.degree() % 2 != 0) return std::nullopt;
    const Field& F = f.field();
    const int d = f.degree() / 2;
    auto lead = F.sqrt(f.lc());
    if (!lead) return std::nullopt;
    std::vector<Fq> r(static_cast<std::size_t>(d) + 1, 0);
    r[static_cast<std::size_t>(d)] = *lead;
    const Fq two_lead_inv = F.inv(F.add(*lead, *lead));
    for (int i = d - 1; i >= 0; --i) {
        Fq s = 0;
        for (int a = i + 1; a <= d - 1; ++a) {
            int b = d + i - a;
            if (b <= i || b > d - 1) continue;
            s = F.add(s, F.mul(r[static_cast<std::size_t>(a)], r[static_cast<std::size_t>(b)]));
        }
        Fq target = F.sub(f.coeff(d + i), s);
        r[static_cast<std::size_t>(i)] = F.mul(target, two_lead_inv);
    }
    Poly root(f.field_ptr(), std::move(r));
    if (root * root != f) return std::nullopt;
    return root;
}

}  // namespace sl2pf
