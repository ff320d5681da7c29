// Copyright 2026 The Stabforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabforge/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stabforge {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Exponent (mod 2N) of the cyclic second-degree character value
// h(x) = exp(pi i p x^2 (e+1) / e) embedded into the ambient phase group:
// exp(pi i / e) = zeta^(N/e).
std::int64_t cyclic_char2_exponent(std::int64_t n, std::int64_t e, std::int64_t p,
                                   std::int64_t x) {
    const std::int64_t mod2n = 2 * n;
    return mod((n / e) % mod2n * mod(p * x % mod2n * x % mod2n * (e + 1), mod2n), mod2n);
}

}  // namespace

SymHom::SymHom(Subgroup domain, CyclicDecomposition dec,
               std::vector<std::vector<std::int64_t>> coeffs)
    : SymHom(std::make_shared<const Subgroup>(std::move(domain)),
             std::make_shared<const CyclicDecomposition>(std::move(dec)), std::move(coeffs)) {}

SymHom::SymHom(std::shared_ptr<const Subgroup> domain,
               std::shared_ptr<const CyclicDecomposition> dec,
               std::vector<std::vector<std::int64_t>> coeffs)
    : domain_(std::move(domain)), dec_(std::move(dec)), c_(std::move(coeffs)) {
    const std::size_t m = dec_->orders.size();
    if (c_.size() != m) throw invalid_input_error("symmetric homomorphism matrix size mismatch");
    for (std::size_t j = 0; j < m; ++j) {
        if (c_[j].size() != m)
            throw invalid_input_error("symmetric homomorphism matrix size mismatch");
        const std::int64_t ej = dec_->orders[j];
        for (std::size_t k = 0; k < m; ++k) {
            const std::int64_t ek = dec_->orders[k];
            if (c_[j][k] < 0 || c_[j][k] >= ej)
                throw invalid_input_error("symmetric homomorphism entry out of range");
            if (c_[j][k] % (ej / std::gcd(ej, ek)) != 0)
                throw invalid_input_error("homomorphism not well defined on cyclic factors");
            if (mod(c_[j][k] * ek - c_[k][j] * ej, ej * ek) != 0)
                throw invalid_input_error("homomorphism is not symmetric");
        }
    }
}

SymHom SymHom::zero(const Subgroup& domain) { return zero(domain, cyclic_decompose(domain)); }

SymHom SymHom::zero(const Subgroup& domain, const CyclicDecomposition& dec) {
    const std::size_t m = dec.orders.size();
    return SymHom(domain, dec, std::vector<std::vector<std::int64_t>>(
                                   m, std::vector<std::int64_t>(m, 0)));
}

PhaseExp SymHom::bicharacter(const GroupElement& x, const GroupElement& y) const {
    const Group& group = domain_->group();
    const std::int64_t n = group.order();
    const std::int64_t mod2n = 2 * n;
    const auto& xc = dec_->coords_at(domain_->position_of(x));
    const auto& yc = dec_->coords_at(domain_->position_of(y));
    std::int64_t k = 0;
    for (std::size_t j = 0; j < dec_->orders.size(); ++j) {
        const std::int64_t ej = dec_->orders[j];
        std::int64_t bj = 0;  // beta(x)_j in Z_{e_j}
        for (std::size_t l = 0; l < dec_->orders.size(); ++l)
            bj = mod(bj + c_[j][l] * xc[l], ej);
        k = mod(k + 2 * (n / ej) * mod(bj * yc[j], ej), mod2n);
    }
    return PhaseExp(k, mod2n);
}

std::vector<PhaseExp> SymHom::character_of(const GroupElement& x) const {
    const auto& idx = domain_->element_indices();
    std::vector<PhaseExp> chi;
    chi.reserve(idx.size());
    for (std::int64_t i : idx) chi.push_back(bicharacter(x, domain_->group().element(i)));
    return chi;
}

SymHom SymHom::add(const SymHom& other) const {
    if (*domain_ != *other.domain_)
        throw invalid_input_error("symmetric homomorphism domain mismatch");
    auto sum = c_;
    // Entries live mod e_j; re-express the other matrix in this
    // decomposition via its bicharacter on our basis.
    const std::size_t m = dec_->orders.size();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            const std::int64_t q = other.bicharacter(dec_->basis[k], dec_->basis[j]).exponent();
            const std::int64_t step = 2 * (domain_->group().order() / dec_->orders[j]);
            if (q % step != 0) throw theory_violation("bicharacter exponent not representable");
            sum[j][k] = mod(sum[j][k] + q / step, dec_->orders[j]);
        }
    }
    return SymHom(domain_, dec_, std::move(sum));
}

SymHom SymHom::negate() const {
    auto neg = c_;
    for (std::size_t j = 0; j < neg.size(); ++j)
        for (std::size_t k = 0; k < neg[j].size(); ++k)
            neg[j][k] = mod(-neg[j][k], dec_->orders[j]);
    return SymHom(domain_, dec_, std::move(neg));
}

bool SymHom::is_zero() const {
    for (const auto& row : c_)
        for (std::int64_t v : row)
            if (v != 0) return false;
    return true;
}

bool operator==(const SymHom& a, const SymHom& b) {
    if (*a.domain_ != *b.domain_) return false;
    // Compare as bicharacters: decompositions may differ.
    const auto& idx = a.domain_->element_indices();
    const Group& group = a.domain_->group();
    for (std::int64_t i : idx) {
        const GroupElement x = group.element(i);
        for (std::int64_t j : idx) {
            const GroupElement y = group.element(j);
            if (a.bicharacter(x, y) != b.bicharacter(x, y)) return false;
        }
    }
    return true;
}

std::vector<SymHom> enumerate_sym(const Subgroup& h) {
    return enumerate_sym(h, cyclic_decompose(h));
}

std::vector<SymHom> enumerate_sym(const Subgroup& h, const CyclicDecomposition& dec) {
    const auto shared_h = std::make_shared<const Subgroup>(h);
    const auto shared_dec = std::make_shared<const CyclicDecomposition>(dec);
    const std::size_t m = dec.orders.size();
    // Free parameters: the diagonal c[j][j] in Z_{e_j}, and for j < k one
    // value t in Z_gcd with c[j][k] = (e_j/g) t, c[k][j] = (e_k/g) t.
    std::vector<std::int64_t> radix;
    for (std::size_t j = 0; j < m; ++j) radix.push_back(dec.orders[j]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
            pairs.emplace_back(j, k);
            radix.push_back(std::gcd(dec.orders[j], dec.orders[k]));
        }

    std::vector<SymHom> out;
    std::vector<std::int64_t> digits(radix.size(), 0);
    bool more = true;
    while (more) {
        std::vector<std::vector<std::int64_t>> c(m, std::vector<std::int64_t>(m, 0));
        for (std::size_t j = 0; j < m; ++j) c[j][j] = digits[j];
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [j, k] = pairs[p];
            const std::int64_t g = std::gcd(dec.orders[j], dec.orders[k]);
            const std::int64_t t = digits[m + p];
            c[j][k] = (dec.orders[j] / g) * t;
            c[k][j] = (dec.orders[k] / g) * t;
        }
        out.emplace_back(shared_h, shared_dec, std::move(c));
        more = false;
        for (std::size_t j = radix.size(); j-- > 0;) {
            if (++digits[j] < radix[j]) {
                more = true;
                break;
            }
            digits[j] = 0;
        }
        if (radix.empty()) break;
    }
    return out;
}

std::int64_t sym_count(const Subgroup& h) {
    const auto dec = cyclic_decompose(h);
    std::int64_t count = 1;
    for (std::size_t j = 0; j < dec.orders.size(); ++j) {
        count *= dec.orders[j];
        for (std::size_t k = j + 1; k < dec.orders.size(); ++k)
            count *= std::gcd(dec.orders[j], dec.orders[k]);
    }
    return count;
}

Char2::Char2(const Subgroup& support, std::vector<PhaseExp> values, SymHom beta)
    : Char2(std::move(values), std::move(beta)) {
    if (beta_.domain() != support)
        throw invalid_input_error("beta domain does not match the support");
}

Char2::Char2(std::vector<PhaseExp> values, SymHom beta)
    : values_(std::move(values)), beta_(std::move(beta)) {
    const Subgroup& h = beta_.domain();
    const auto& idx = h.element_indices();
    if (values_.size() != idx.size()) throw invalid_input_error("character table size mismatch");
    const Group& group = h.group();
    if (!values_[h.position_of(group.zero())].is_one())
        throw invalid_input_error("not a character of second degree");
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const GroupElement xa = group.element(idx[a]);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const GroupElement xb = group.element(idx[b]);
            const std::size_t ab = h.position_of(group.add(xa, xb));
            if (values_[ab] != values_[a] * values_[b] * beta_.bicharacter(xa, xb))
                throw invalid_input_error("not a character of second degree");
        }
    }
}

PhaseExp Char2::at(const GroupElement& x) const {
    return values_[support().position_of(x)];
}

std::optional<PhaseExp> Char2::eval(const GroupElement& x) const {
    if (!support().contains(x)) return std::nullopt;
    return at(x);
}

Char2 Char2::mul(const Char2& other) const {
    if (support() != other.support()) throw invalid_input_error("character support mismatch");
    std::vector<PhaseExp> prod;
    prod.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) prod.push_back(values_[i] * other.values_[i]);
    return Char2(std::move(prod), beta_.add(other.beta_));
}

Char2 Char2::conjugate() const {
    std::vector<PhaseExp> conj;
    conj.reserve(values_.size());
    for (const auto& v : values_) conj.push_back(v.conj());
    return Char2(std::move(conj), beta_.negate());
}

std::optional<PhaseExp> subchar_eval(const SubChar2& h0, const GroupElement& x) {
    return h0.eval(x);
}

Char2 char2_cyclic(std::int64_t d, std::int64_t p) {
    if (d <= 0) throw invalid_input_error("cyclic order must be positive");
    if (p < 0 || p >= d) throw invalid_input_error("multiplier out of range [0, d)");
    const Group zd({std::vector<std::int64_t>{d}});
    const Subgroup full = Subgroup::full(zd);
    auto dec = cyclic_decompose(full);
    // The decomposition of the full cyclic group picks a generator of
    // maximal order; express the multiplier in that basis.
    // For Z_d the basis element is g = (g0) with gcd(g0, d) = 1 when d > 1;
    // beta(g)(g) = exp(2 pi i p g0^2 / d) determines the matrix entry.
    std::vector<std::vector<std::int64_t>> c;
    if (d > 1) {
        const std::int64_t g0 = dec.basis[0].residues[0];
        c = {{mod(p * g0 % d * g0, d)}};
    }
    auto beta = SymHom(full, dec, std::move(c));

    const std::int64_t n = zd.order();
    std::vector<PhaseExp> values;
    values.reserve(static_cast<std::size_t>(d));
    for (std::int64_t x = 0; x < d; ++x)
        values.emplace_back(cyclic_char2_exponent(n, d, p, x), 2 * n);
    return Char2(full, std::move(values), std::move(beta));
}

Char2 char2_product(const SymHom& beta) {
    const Subgroup& h = beta.domain();
    const Group& group = h.group();
    const auto& dec = beta.decomposition();
    const std::int64_t n = group.order();
    const std::int64_t mod2n = 2 * n;
    const std::size_t m = dec.orders.size();

    const auto& idx = h.element_indices();
    std::vector<PhaseExp> values;
    values.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto& xc = dec.coords_at(i);
        std::int64_t k = 0;
        for (std::size_t j = 0; j < m; ++j)
            k = mod(k + cyclic_char2_exponent(n, dec.orders[j], beta.coeffs()[j][j], xc[j]),
                    mod2n);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = j + 1; l < m; ++l)
                k = mod(k + 2 * (n / dec.orders[j]) * mod(beta.coeffs()[j][l] * xc[l] * xc[j],
                                                          dec.orders[j]),
                        mod2n);
        values.emplace_back(k, mod2n);
    }
    return Char2(std::move(values), beta);
}

Char2 trivial_char2(const Subgroup& h) { return char2_product(SymHom::zero(h)); }

std::vector<Char2> enumerate_ch2(const Subgroup& h) {
    const Group& group = h.group();
    const auto dec = cyclic_decompose(h);
    const auto syms = enumerate_sym(h, dec);
    const auto& idx = h.element_indices();
    const std::int64_t n = group.order();
    const std::int64_t mod2n = 2 * n;
    const std::size_t m = dec.orders.size();

    std::vector<Char2> out;
    std::set<std::vector<std::int64_t>> tables;  // duplicate check (Theorem-exactness)
    for (const auto& beta : syms) {
        const Char2 base = char2_product(beta);
        std::vector<std::int64_t> a(m, 0);
        bool more = true;
        while (more) {
            // chi_a(x) = exp(2 pi i sum_j a_j x_j / e_j)
            std::vector<PhaseExp> values;
            values.reserve(idx.size());
            std::vector<std::int64_t> key;
            key.reserve(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                const auto& xc = dec.coords_at(i);
                std::int64_t k = base.values()[i].exponent();
                for (std::size_t j = 0; j < m; ++j)
                    k = mod(k + 2 * (n / dec.orders[j]) * mod(a[j] * xc[j], dec.orders[j]), mod2n);
                values.emplace_back(k, mod2n);
                key.push_back(k);
            }
            if (!tables.insert(key).second)
                throw theory_violation("duplicate character of second degree");
            out.emplace_back(std::move(values), beta);
            more = false;
            for (std::size_t j = m; j-- > 0;) {
                if (++a[j] < dec.orders[j]) {
                    more = true;
                    break;
                }
                a[j] = 0;
            }
            if (m == 0) break;
        }
    }
    return out;
}

std::int64_t ch2_count(const Subgroup& h) { return h.size() * sym_count(h); }

SymHom beta_of(const Subgroup& h, const CyclicDecomposition& dec,
               const std::vector<PhaseExp>& values) {
    const Group& group = h.group();
    const auto& idx = h.element_indices();
    if (values.size() != idx.size()) throw invalid_input_error("character table size mismatch");
    if (!values[h.position_of(group.zero())].is_one())
        throw invalid_input_error("not a character of second degree");

    const std::int64_t n = group.order();
    const std::size_t m = dec.orders.size();

    auto bichar = [&](const GroupElement& x, const GroupElement& y) {
        const std::size_t px = h.position_of(x);
        const std::size_t py = h.position_of(y);
        const std::size_t pxy = h.position_of(group.add(x, y));
        return values[pxy] * values[px].conj() * values[py].conj();
    };

    // Matrix entries from basis evaluations; non-divisible exponents mean
    // the table does not come from a character of second degree.
    std::vector<std::vector<std::int64_t>> c(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t step = 2 * (n / dec.orders[j]);
        for (std::size_t k = 0; k < m; ++k) {
            const std::int64_t q = bichar(dec.basis[k], dec.basis[j]).exponent();
            if (q % step != 0) throw invalid_input_error("not a character of second degree");
            c[j][k] = mod(q / step, dec.orders[j]);
        }
    }

    SymHom beta = [&] {
        try {
            return SymHom(h, dec, std::move(c));
        } catch (const invalid_input_error&) {
            throw invalid_input_error("not a character of second degree");
        }
    }();

    // Full defining relation; basis recovery alone does not rule out
    // impostor tables.
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const GroupElement xa = group.element(idx[a]);
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const GroupElement xb = group.element(idx[b]);
            const std::size_t ab = h.position_of(group.add(xa, xb));
            if (values[ab] != values[a] * values[b] * beta.bicharacter(xa, xb))
                throw invalid_input_error("not a character of second degree");
        }
    }
    return beta;
}

SymHom beta_of(const Char2& h) {
    SymHom recovered = beta_of(h.support(), h.beta().decomposition(), h.values());
    if (recovered != h.beta())
        throw theory_violation("recovered beta disagrees with the stored one");
    return recovered;
}

}  // namespace stabforge
