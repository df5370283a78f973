#include "sl2pf/certificate.hpp"

namespace sl2pf {

namespace {

constexpr int kArities[9] = {9, 5, 4, 5, 11, 5, 4, 5, 4};

void check_word(const Word& w, WordFamily family, int arity) {
    require(w.family() == family && w.arity() == arity, Errc::ArityMismatch,
            "certificate slot family/arity mismatch");
}

}  // namespace

Certificate Certificate::identity(FieldPtr f) {
    return Certificate{Word::zeros(WordFamily::G, f, 9), Quintuple::zeros(f),
                       Word::zeros(WordFamily::G, f, 4), Quintuple::zeros(f),
                       Word::zeros(WordFamily::F, f, 11), Quintuple::zeros(f),
                       Word::zeros(WordFamily::F, f, 4), Quintuple::zeros(f),
                       Word::zeros(WordFamily::G, f, 4)};
}

bool Certificate::operator==(const Certificate& o) const {
    return g9 == o.g9 && lambda_t_front == o.lambda_t_front && g4_front == o.g4_front &&
           lambda_front == o.lambda_front && f11 == o.f11 && lambda_back == o.lambda_back &&
           f4 == o.f4 && lambda_t_back == o.lambda_t_back && g4_back == o.g4_back;
}

void validate_certificate(const Certificate& cert) {
    check_word(cert.g9, WordFamily::G, kArities[0]);
    require_quintuple(cert.lambda_t_front, "certificate Lambda^T slot 2");
    check_word(cert.g4_front, WordFamily::G, kArities[2]);
    require_quintuple(cert.lambda_front, "certificate Lambda slot 4");
    check_word(cert.f11, WordFamily::F, kArities[4]);
    require_quintuple(cert.lambda_back, "certificate Lambda slot 6");
    check_word(cert.f4, WordFamily::F, kArities[6]);
    require_quintuple(cert.lambda_t_back, "certificate Lambda^T slot 8");
    check_word(cert.g4_back, WordFamily::G, kArities[8]);
}

Mat2 omega_eval(const Certificate& cert) {
    validate_certificate(cert);
    Mat2 m = word_eval(cert.g9);
    m = m * lambda_t_eval(cert.lambda_t_front);
    m = m * word_eval(cert.g4_front);
    m = m * lambda_eval(cert.lambda_front);
    m = m * word_eval(cert.f11);
    m = m * lambda_eval(cert.lambda_back);
    m = m * word_eval(cert.f4);
    m = m * lambda_t_eval(cert.lambda_t_back);
    m = m * word_eval(cert.g4_back);
    return m;
}

std::vector<Poly> flatten(const Certificate& cert) {
    validate_certificate(cert);
    std::vector<Poly> out;
    out.reserve(52);
    auto push_word = [&](const Word& w) {
        for (auto& p : w.family_params()) out.push_back(std::move(p));
    };
    auto push_quintuple = [&](const Quintuple& t) {
        for (auto& p : lambda_from_quintuple(t)) out.push_back(std::move(p));
    };
    push_word(cert.g9);
    push_quintuple(cert.lambda_t_front);
    push_word(cert.g4_front);
    push_quintuple(cert.lambda_front);
    push_word(cert.f11);
    push_quintuple(cert.lambda_back);
    push_word(cert.f4);
    push_quintuple(cert.lambda_t_back);
    push_word(cert.g4_back);
    return out;
}

Certificate unflatten(FieldPtr f, const std::vector<Poly>& params) {
    require(params.size() == 52, Errc::BadLength,
            "expected 52 parameters, got " + std::to_string(params.size()));
    std::size_t pos = 0;
    auto take_word = [&](WordFamily fam, int arity) {
        std::vector<Poly> ps(params.begin() + static_cast<long>(pos),
                             params.begin() + static_cast<long>(pos + static_cast<std::size_t>(arity)));
        pos += static_cast<std::size_t>(arity);
        return Word::from_family(fam, f, std::move(ps));
    };
    auto take_quintuple = [&]() {
        Quintuple t{params[pos], params[pos + 1], params[pos + 2], params[pos + 3], params[pos + 4]};
        pos += 5;
        return t;
    };
    Certificate cert{take_word(WordFamily::G, 9), take_quintuple(),
                     take_word(WordFamily::G, 4),  take_quintuple(),
                     take_word(WordFamily::F, 11), take_quintuple(),
                     take_word(WordFamily::F, 4),  take_quintuple(),
                     take_word(WordFamily::G, 4)};
    validate_certificate(cert);
    return cert;
}

}  // namespace sl2pf
