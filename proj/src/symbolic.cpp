#include "ukostant/symbolic.hpp"

#include <sstream>

namespace ukostant {

void SymbolicPolynomial::add_term(std::vector<int> exps, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymbolicPolynomial SymbolicPolynomial::constant(std::int64_t c, int nvars) {
    SymbolicPolynomial p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

SymbolicPolynomial SymbolicPolynomial::variable(int idx, int nvars) {
    SymbolicPolynomial p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(idx)] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

SymbolicPolynomial SymbolicPolynomial::operator+(const SymbolicPolynomial& o) const {
    SymbolicPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SymbolicPolynomial SymbolicPolynomial::operator-(const SymbolicPolynomial& o) const {
    SymbolicPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

SymbolicPolynomial SymbolicPolynomial::operator-() const {
    SymbolicPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

SymbolicPolynomial SymbolicPolynomial::operator*(const SymbolicPolynomial& o) const {
    SymbolicPolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(e1);
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

SymbolicPolynomial SymbolicPolynomial::coefficient_of_x(int k) const {
    SymbolicPolynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[0] == k) {
            std::vector<int> reduced = e;
            reduced[0] = 0;
            r.add_term(std::move(reduced), c);
        }
    return r;
}

int SymbolicPolynomial::max_variable() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        for (int i = static_cast<int>(e.size()) - 1; i > m; --i)
            if (e[static_cast<size_t>(i)] > 0) {
                m = i;
                break;
            }
    return m;
}

int SymbolicPolynomial::degree_in(int idx) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(idx)]);
    return m;
}

RingElement SymbolicPolynomial::evaluate(const RingDescriptor& desc,
                                         const std::vector<RingElement>& values) const {
    RingElement acc = RingElement::zero(desc);
    for (const auto& [e, c] : terms_) {
        if (e[0] != 0) throw DomainError("bad-input", "cannot evaluate a polynomial containing x");
        RingElement term = RingElement::from_int(desc, static_cast<long>(c));
        for (size_t i = 1; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = term * values[i - 1];
        acc = acc + term;
    }
    return acc;
}

std::string SymbolicPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // reverse map order so lower-index variables print first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::int64_t coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool wrote = false;
        if (coeff != 1) {
            out << coeff;
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << "*";
            if (i == 0)
                out << "x";
            else
                out << "b" << i;
            if (e[i] > 1) out << "^" << e[i];
            wrote = true;
        }
        if (!wrote) out << 1;
    }
    return out.str();
}

namespace {

using SymMatrix = std::vector<std::vector<SymbolicPolynomial>>;

SymbolicPolynomial cofactor_det(const SymMatrix& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    const int nvars = m[0][0].nvars();
    SymbolicPolynomial det(nvars);
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        SymMatrix minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<SymbolicPolynomial> row;
            row.reserve(n - 1);
            for (size_t j = 1; j < n; ++j) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        SymbolicPolynomial term = m[r][0] * cofactor_det(minor);
        det = (r % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

std::map<int, SymbolicPolynomial> symbolic_charpoly_oracle(int n) {
    if (n < 1) throw DomainError("bad-input", "n must be >= 1");
    if (n > 5) throw DomainError("cost-bound-exceeded", "symbolic oracle is limited to n <= 5");

    const int nvars = n + 1;  // x, b_1..b_n
    auto x = SymbolicPolynomial::variable(0, nvars);
    auto zero = SymbolicPolynomial(nvars);
    auto one = SymbolicPolynomial::constant(1, nvars);
    auto b = [&](int k) { return SymbolicPolynomial::variable(k, nvars); };

    // xI - M for the companion-type model matrix
    SymMatrix m(static_cast<size_t>(n),
                std::vector<SymbolicPolynomial>(static_cast<size_t>(n), zero));
    for (int i = 0; i < n; ++i) m[i][i] = x;
    m[0][n - 1] = m[0][n - 1] + SymbolicPolynomial::constant(2, nvars) * b(n);
    for (int k = 1; k <= n - 1; ++k) {
        m[0][k - 1] = m[0][k - 1] + b(k);
        m[n - k][n - 1] = m[n - k][n - 1] + b(k);
        m[k][k - 1] = m[k][k - 1] - one;
    }

    SymbolicPolynomial chi = cofactor_det(m);

    std::map<int, SymbolicPolynomial> result;
    for (int k = 1; k <= n; ++k) {
        SymbolicPolynomial ak = chi.coefficient_of_x(n - k);
        if (ak.max_variable() > k)
            throw std::logic_error("oracle: a_k depends on b beyond b_k");
        if (ak.degree_in(k) > 1)
            throw std::logic_error("oracle: a_k is not linear in b_k");
        // partial derivative in b_k must be the constant 2
        SymbolicPolynomial linear_part(nvars);
        for (const auto& [e, c] : ak.terms())
            if (e[static_cast<size_t>(k)] == 1) {
                std::vector<int> reduced = e;
                reduced[static_cast<size_t>(k)] = 0;
                linear_part = linear_part + SymbolicPolynomial::constant(c, nvars) *
                                                [&] {
                                                    SymbolicPolynomial mono =
                                                        SymbolicPolynomial::constant(1, nvars);
                                                    for (size_t i = 0; i < reduced.size(); ++i)
                                                        for (int t = 0; t < reduced[i]; ++t)
                                                            mono = mono * SymbolicPolynomial::
                                                                       variable(static_cast<int>(i),
                                                                                nvars);
                                                    return mono;
                                                }();
            }
        if (!(linear_part == SymbolicPolynomial::constant(2, nvars)))
            throw std::logic_error("oracle: coefficient of b_k in a_k is not 2");
        result.emplace(k, std::move(ak));
    }
    return result;
}

}  // namespace ukostant
