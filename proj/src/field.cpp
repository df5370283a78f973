#include "sl2pf/field.hpp"

#include <algorithm>
#include <sstream>

namespace sl2pf {

namespace {

bool small_is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Minimal F_p[x] helpers on raw coefficient vectors (lowest degree first),
// used only while constructing a field.
using Vec = std::vector<long>;

void vtrim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec vmul(const Vec& a, const Vec& b, long p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    vtrim(r);
    return r;
}

Vec vmod(Vec a, const Vec& m, long p) {
    long lead_inv = 1;
    // m monic by construction here
    while (a.size() >= m.size() && !m.empty()) {
        long c = a.back() * lead_inv % p;
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
        }
        vtrim(a);
        if (a.empty()) break;
    }
    return a;
}

bool divides(const Vec& d, Vec a, long p) {
    // d monic
    return vmod(std::move(a), d, p).empty();
}

// Trial division by all monic polynomials of degree <= deg/2.
bool vec_irreducible(const Vec& f, long p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int dd = 1; dd <= deg / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Vec cand(static_cast<std::size_t>(dd) + 1, 0);
            long v = idx;
            for (int i = 0; i < dd; ++i) {
                cand[static_cast<std::size_t>(i)] = v % p;
                v /= p;
            }
            cand[static_cast<std::size_t>(dd)] = 1;
            if (divides(cand, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::make(long p, int n) {
    if (n <= 1) return make(p, 1, {});
    // base-p counter over the n low coefficients, constant term fastest
    Vec lows(static_cast<std::size_t>(n), 0);
    for (;;) {
        Vec f = lows;
        f.push_back(1);
        if (vec_irreducible(f, p)) {
            std::vector<long> mod(f.begin(), f.end());
            return make(p, n, mod);
        }
        int i = 0;
        while (i < n && lows[static_cast<std::size_t>(i)] == p - 1) lows[static_cast<std::size_t>(i++)] = 0;
        require(i < n, Errc::ReducibleModulus, "no irreducible modulus found");
        ++lows[static_cast<std::size_t>(i)];
    }
}

FieldPtr Field::make(long p, int n, const std::vector<long>& modulus_coeffs) {
    require(small_is_prime(p), Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    require(p % 2 == 1, Errc::EvenCharacteristic, "characteristic 2 is not supported");
    require(n >= 1, Errc::ReducibleModulus, "extension degree must be >= 1");

    long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        require(q <= kMaxQ, Errc::FieldTooLarge, "q exceeds table-arithmetic cap");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = q;
    if (n > 1) {
        require(static_cast<int>(modulus_coeffs.size()) == n + 1, Errc::ReducibleModulus,
                "modulus degree must equal the extension degree");
        Vec m;
        m.reserve(modulus_coeffs.size());
        for (long c : modulus_coeffs) m.push_back(((c % p) + p) % p);
        require(m.back() == 1, Errc::ReducibleModulus, "modulus must be monic");
        require(vec_irreducible(m, p), Errc::ReducibleModulus, "modulus is reducible over F_p");
        f->modulus_.assign(m.begin(), m.end());
    }
    f->build_tables();
    return f;
}

void Field::build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    sqrt_.assign(q, kNoSqrt);

    auto decode = [&](std::size_t v) {
        Vec c(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<long>(v % static_cast<std::size_t>(p_));
            v /= static_cast<std::size_t>(p_);
        }
        return c;
    };
    auto encode = [&](const Vec& c) {
        std::size_t v = 0;
        for (int i = n_ - 1; i >= 0; --i)
            v = v * static_cast<std::size_t>(p_) +
                static_cast<std::size_t>(i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0);
        return static_cast<Fq>(v);
    };

    Vec mod(modulus_.begin(), modulus_.end());
    for (std::size_t a = 0; a < q; ++a) {
        Vec ca = decode(a);
        Vec na(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i) na[i] = (p_ - ca[i]) % p_;
        neg_[a] = encode(na);
        for (std::size_t b = 0; b < q; ++b) {
            Vec cb = decode(b);
            Vec s(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                s[static_cast<std::size_t>(i)] =
                    (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p_;
            add_[a * q + b] = encode(s);
            Vec prod = vmul(ca, cb, p_);
            vtrim(prod);
            if (n_ > 1) prod = vmod(std::move(prod), mod, p_);
            mul_[a * q + b] = encode(prod);
        }
    }
    for (std::size_t a = 1; a < q; ++a) {
        for (std::size_t b = 1; b < q; ++b) {
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<Fq>(b);
                break;
            }
        }
    }
    for (std::size_t a = 0; a < q; ++a) {
        Fq sq = mul_[a * q + a];
        if (sqrt_[sq] == kNoSqrt || a < sqrt_[sq]) sqrt_[sq] = static_cast<Fq>(a);
    }
}

Fq Field::pow(Fq a, const BigInt& e) const {
    if (e == 0) return 1;
    require(a != 0 || e >= 0, Errc::DivisionByZero, "0^negative");
    if (a == 0) return 0;
    BigInt r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    Fq acc = 1, base = a;
    while (r > 0) {
        if ((r & 1) != 0) acc = mul(acc, base);
        base = mul(base, base);
        r >>= 1;
    }
    return acc;
}

Fq Field::from_int(long v) const {
    long r = ((v % p_) + p_) % p_;
    return static_cast<Fq>(r);
}

Fq Field::from_coeffs(const std::vector<long>& c) const {
    require(static_cast<int>(c.size()) <= n_, Errc::ParseError, "too many element coefficients");
    std::size_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        long ci = i < static_cast<int>(c.size()) ? ((c[static_cast<std::size_t>(i)] % p_) + p_) % p_ : 0;
        v = v * static_cast<std::size_t>(p_) + static_cast<std::size_t>(ci);
    }
    return static_cast<Fq>(v);
}

std::vector<long> Field::coeffs(Fq a) const {
    std::vector<long> c(static_cast<std::size_t>(n_));
    std::size_t v = a;
    for (int i = 0; i < n_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<long>(v % static_cast<std::size_t>(p_));
        v /= static_cast<std::size_t>(p_);
    }
    return c;
}

std::string Field::elem_to_string(Fq a) const {
    if (n_ == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (int i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << c[static_cast<std::size_t>(i)];
    }
    os << ']';
    return os.str();
}

Fq Field::elem_from_string(const std::string& s) const {
    if (s.empty()) fail(Errc::ParseError, "empty field element");
    if (s.front() == '[') {
        require(s.back() == ']', Errc::ParseError, "unterminated element bracket");
        std::vector<long> c;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            require(!tok.empty(), Errc::ParseError, "empty element coefficient");
            c.push_back(std::stol(tok));
        }
        return from_coeffs(c);
    }
    for (char ch : s)
        require(ch >= '0' && ch <= '9', Errc::ParseError, "bad element literal '" + s + "'");
    return from_int(std::stol(s));
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::BothZero: return "BothZero";
        case Errc::NotConstant: return "NotConstant";
        case Errc::ParseError: return "ParseError";
        case Errc::ZeroOrConstant: return "ZeroOrConstant";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::InvalidD: return "InvalidD";
        case Errc::NonConstantResidue: return "NonConstantResidue";
        case Errc::NotAnRthPower: return "NotAnRthPower";
        case Errc::NotPrimePoly: return "NotPrimePoly";
        case Errc::NonUnitDeterminant: return "NonUnitDeterminant";
        case Errc::FamilyMismatch: return "FamilyMismatch";
        case Errc::BadArity: return "BadArity";
        case Errc::ZeroUnit: return "ZeroUnit";
        case Errc::NotUnipotent: return "NotUnipotent";
        case Errc::NoUnitAdjustment: return "NoUnitAdjustment";
        case Errc::NotSL2: return "NotSL2";
        case Errc::QuintupleNotSL2: return "QuintupleNotSL2";
        case Errc::PreconditionShape: return "PreconditionShape";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NotCoprimeExponents: return "NotCoprimeExponents";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::BadLength: return "BadLength";
        case Errc::NotUnimodular: return "NotUnimodular";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::InternalCheck: return "InternalCheck";
    }
    return "UnknownError";
}

BigInt big_modinv(const BigInt& a, const BigInt& m) {
    require(m >= 1, Errc::InvalidD, "modinv needs m >= 1");
    if (m == 1) return 1;
    BigInt r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        BigInt qt = r0 / r1;
        BigInt r2 = r0 - qt * r1;
        BigInt s2 = s0 - qt * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    require(r0 == 1, Errc::NotCoprimeExponents, "modinv of non-unit");
    BigInt x = s0 % m;
    if (x <= 0) x += m;
    return x;
}

BigInt big_pow(long base, long exp) {
    BigInt r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace sl2pf
