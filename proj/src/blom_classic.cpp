#include "sblom/blom_classic.hpp"

#include "sblom/encoding.hpp"

namespace sblom {

SymBivarPoly SymBivarPoly::from_coeffs(std::vector<std::vector<mpz_class>> c,
                                       const FieldParams& fp) {
    if (c.empty()) fail("InvalidArgument", "empty coefficient matrix");
    const std::size_t n = c.size();
    for (auto& row : c) {
        if (row.size() != n) fail("InvalidArgument", "coefficient matrix not square");
        for (auto& v : row) v = mod_reduce(v, fp.p);
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (c[u][v] != c[v][u])
                fail("InvalidArgument", "coefficient matrix not symmetric");
    SymBivarPoly f;
    f.c = std::move(c);
    return f;
}

mpz_class SymBivarPoly::eval(const mpz_class& x, const mpz_class& y,
                             const FieldParams& fp) const {
    // Horner in x over polynomials in y.
    mpz_class yr = mod_reduce(y, fp.p);
    mpz_class acc = 0;
    for (auto row = c.rbegin(); row != c.rend(); ++row) {
        mpz_class row_val = 0;
        for (auto it = row->rbegin(); it != row->rend(); ++it)
            row_val = (row_val * yr + *it) % fp.p;
        acc = (acc * mod_reduce(x, fp.p) + row_val) % fp.p;
    }
    return acc;
}

nlohmann::json SymBivarPoly::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : c) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(to_hex(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

SymBivarPoly SymBivarPoly::from_json(const nlohmann::json& j, const FieldParams& fp) {
    std::vector<std::vector<mpz_class>> c;
    for (const auto& row : j) {
        std::vector<mpz_class> r;
        for (const auto& v : row) r.push_back(from_hex(v.get<std::string>()));
        c.push_back(std::move(r));
    }
    return from_coeffs(std::move(c), fp);
}

nlohmann::json ClassicShare::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    const auto& cs = share_poly.coeffs();
    for (std::size_t k = 0; k <= degree_m; ++k)
        coeffs.push_back(to_hex(k < cs.size() ? cs[k] : mpz_class(0)));
    return {{"r", to_hex(owner_point)}, {"coeffs", std::move(coeffs)}};
}

ClassicShare ClassicShare::from_json(const nlohmann::json& j, const FieldParams& fp) {
    std::vector<mpz_class> coeffs;
    for (const auto& v : j.at("coeffs")) coeffs.push_back(from_hex(v.get<std::string>()));
    if (coeffs.empty()) fail("InvalidArgument", "share has no coefficients");
    ClassicShare s;
    s.owner_point = from_hex(j.at("r").get<std::string>());
    s.degree_m = coeffs.size() - 1;
    s.share_poly = Poly(std::move(coeffs), fp.p);
    return s;
}

SymBivarPoly gen_master(std::size_t m, const FieldParams& fp, Rng& rng) {
    if (m < 1) fail("InvalidArgument", "degree must be at least 1");
    std::vector<std::vector<mpz_class>> c(m + 1, std::vector<mpz_class>(m + 1));
    for (std::size_t u = 0; u <= m; ++u) {
        for (std::size_t v = u; v <= m; ++v) {
            c[u][v] = rng.below(fp.p);
            c[v][u] = c[u][v];
        }
    }
    return SymBivarPoly::from_coeffs(std::move(c), fp);
}

ClassicShare derive_share(const SymBivarPoly& f, const mpz_class& r_i,
                          const FieldParams& fp) {
    if (r_i < 2 || r_i > fp.p - 2) fail("InvalidArgument", "point outside [2, p-2]");
    mpz_class r = mod_reduce(r_i, fp.p);
    const std::size_t m = f.degree();
    // Coefficient k of g_i is sum_v c_kv r^v.
    std::vector<mpz_class> share(m + 1, 0);
    for (std::size_t k = 0; k <= m; ++k) {
        mpz_class acc = 0;
        for (auto it = f.c[k].rbegin(); it != f.c[k].rend(); ++it)
            acc = (acc * r + *it) % fp.p;
        share[k] = acc;
    }
    ClassicShare s;
    s.owner_point = r_i;
    s.degree_m = m;
    s.share_poly = Poly(std::move(share), fp.p);
    return s;
}

BaseElem classic_key(const ClassicShare& share, const mpz_class& r_peer,
                     const FieldParams& fp) {
    if (r_peer < 2 || r_peer > fp.p - 2) fail("InvalidArgument", "point outside [2, p-2]");
    return BaseElem::reduce(poly_eval(share.share_poly, r_peer), fp);
}

} // namespace sblom
