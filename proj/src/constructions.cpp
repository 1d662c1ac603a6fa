#include "hsd/constructions.hpp"

#include "hsd/codeops.hpp"
#include "hsd/vec.hpp"

namespace hsd {

namespace {

void require_unitary(uint8_t lambda) {
    if (!gf::is_unitary(lambda)) throw NotUnitaryLambda();
}

GeneratorMatrix with_identity(const DenseMatrix& x) {
    const size_t k = x.rows;
    DenseMatrix g(x.ring, k, 2 * k);
    for (size_t i = 0; i < k; ++i) {
        g.at(i, i) = 1;
        for (size_t j = 0; j < k; ++j) g.at(i, k + j) = x.at(i, j);
    }
    return {g};
}

// sum_{i=0}^{k-j-1} Theta(a_{[i+j]_k}, conj(a_i), t)[conj(mu)]
//   + conj(lambda) * sum_{i=k-j}^{k-1} (same), the mixed-sum family of
// Theorem 2 (Theorem 3 is the lambda = mu = 1 case).
uint8_t mixed_theta_sum(const std::vector<std::vector<uint8_t>>& a,
                        const std::vector<std::vector<uint8_t>>& ca, size_t j, size_t t,
                        uint8_t conj_lambda, uint8_t conj_mu) {
    const size_t k = a.size();
    uint8_t plain = 0, wrapped = 0;
    for (size_t i = 0; i < k; ++i) {
        const uint8_t term = theta(a[mod_index(i + j, k)], ca[i], t, conj_mu);
        if (i < k - j)
            plain ^= term;
        else
            wrapped ^= term;
    }
    return plain ^ gf::mul(conj_lambda, wrapped);
}

}  // namespace

bool thm1_conditions(const Theorem1Params& p) {
    require_unitary(p.lambda);
    const size_t n = p.n();
    const uint8_t cl = gf::conj(p.lambda);
    const auto ca = conj_vec(p.a), cb = conj_vec(p.b);
    for (size_t j = 0; j <= n / 2; ++j) {
        const uint8_t s = theta(p.a, ca, j, cl) ^ theta(p.b, cb, j, cl);
        if (s != (j == 0 ? negate(1) : 0)) return false;
    }
    if (p.dense_c) {
        const DenseMatrix& c = *p.dense_c;
        return mat_mul(c, mat_transpose(mat_conj(c))) == identity(p.ring, n);
    }
    require_unitary(p.mu);
    return is_hermitian_unitary({p.ring, p.mu, p.c}, UnitaryTarget::PlusOne);
}

GeneratorMatrix thm1_build(const Theorem1Params& p) {
    if (!thm1_conditions(p)) throw ConditionsNotMet("theorem 1");
    const size_t n = p.n();
    const DenseMatrix a = materialize({p.ring, p.lambda, p.a});
    const DenseMatrix b = materialize({p.ring, p.lambda, p.b});
    const DenseMatrix c = p.dense_c ? *p.dense_c : materialize({p.ring, p.mu, p.c});
    const DenseMatrix j = exchange(p.ring, n);
    const DenseMatrix tl = negate(mat_mul(mat_mul(mat_transpose(a), c), j));
    const DenseMatrix tr = negate(mat_conj(b));
    const DenseMatrix bl = mat_mul(mat_mul(mat_transpose(b), c), j);
    const DenseMatrix br = negate(mat_conj(a));
    DenseMatrix x(p.ring, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t jj = 0; jj < n; ++jj) {
            x.at(i, jj) = tl.at(i, jj);
            x.at(i, n + jj) = tr.at(i, jj);
            x.at(n + i, jj) = bl.at(i, jj);
            x.at(n + i, n + jj) = br.at(i, jj);
        }
    return with_identity(x);
}

bool thm2_conditions(const Theorem2Params& p) {
    require_unitary(p.lambda);
    require_unitary(p.mu);
    const size_t k = p.k(), n = p.n();
    const uint8_t cl = gf::conj(p.lambda), cm = gf::conj(p.mu);
    std::vector<std::vector<uint8_t>> ca(k);
    for (size_t i = 0; i < k; ++i) ca[i] = conj_vec(p.a_blocks[i]);

    for (size_t t = 0; t <= n / 2; ++t) {
        uint8_t s = 0;
        for (size_t i = 0; i < k; ++i) s ^= theta(p.a_blocks[i], ca[i], t, cm);
        if (s != (t == 0 ? negate(1) : 0)) return false;
    }
    for (size_t j = 1; j <= k / 2; ++j)
        if (mixed_theta_sum(p.a_blocks, ca, j, 0, cl, cm) != 0) return false;
    for (size_t j = 1; j < k; ++j)
        for (size_t t = 1; t <= n / 2; ++t)
            if (mixed_theta_sum(p.a_blocks, ca, j, t, cl, cm) != 0) return false;
    return true;
}

GeneratorMatrix thm2_build(const Theorem2Params& p) {
    if (!thm2_conditions(p)) throw ConditionsNotMet("theorem 2");
    std::vector<DenseMatrix> blocks;
    blocks.reserve(p.k());
    for (const auto& a : p.a_blocks) blocks.push_back(materialize({p.ring, p.mu, a}));
    return with_identity(block_circulant(p.ring, p.lambda, blocks));
}

bool thm3_conditions(const Theorem3Params& p) {
    const size_t k = p.k(), n = p.n(), kn = k * n;
    const uint8_t x11 = gf::mul(p.x1, gf::conj(p.x1));
    const uint8_t x22 = gf::mul(p.x2, gf::conj(p.x2));
    const uint8_t x33 = gf::mul(p.x3, gf::conj(p.x3));

    // kn * x2*conj(x2) reduces to (kn mod 2) copies in characteristic 2.
    if ((1 ^ x11 ^ (kn % 2 ? x22 : 0)) != 0) return false;

    uint8_t coeff_sum = 0;
    for (const auto& a : p.a_blocks)
        for (uint8_t e : a) coeff_sum ^= gf::conj(e);
    if ((gf::mul(p.x1, gf::conj(p.x3)) ^ gf::mul(p.x2, coeff_sum)) != 0) return false;

    std::vector<std::vector<uint8_t>> ca(k);
    for (size_t i = 0; i < k; ++i) ca[i] = conj_vec(p.a_blocks[i]);

    for (size_t t = 0; t <= n / 2; ++t) {
        uint8_t s = 0;
        for (size_t i = 0; i < k; ++i) s ^= theta(p.a_blocks[i], ca[i], t, 1);
        if (s != (t == 0 ? negate(uint8_t(1 ^ x33)) : negate(x33))) return false;
    }
    for (size_t j = 1; j <= k / 2; ++j)
        if (mixed_theta_sum(p.a_blocks, ca, j, 0, 1, 1) != negate(x33)) return false;
    for (size_t j = 1; j < k; ++j)
        for (size_t t = 1; t <= n / 2; ++t)
            if (mixed_theta_sum(p.a_blocks, ca, j, t, 1, 1) != negate(x33)) return false;
    return true;
}

GeneratorMatrix thm3_build(const Theorem3Params& p) {
    if (!thm3_conditions(p)) throw ConditionsNotMet("theorem 3");
    const size_t kn = p.k() * p.n();
    std::vector<DenseMatrix> blocks;
    blocks.reserve(p.k());
    for (const auto& a : p.a_blocks) blocks.push_back(materialize({p.ring, 1, a}));
    const DenseMatrix y = block_circulant(p.ring, 1, blocks);
    DenseMatrix x(p.ring, kn + 1, kn + 1);
    x.at(0, 0) = p.x1;
    for (size_t j = 0; j < kn; ++j) x.at(0, j + 1) = p.x2;
    for (size_t i = 0; i < kn; ++i) x.at(i + 1, 0) = p.x3;
    for (size_t i = 0; i < kn; ++i)
        for (size_t j = 0; j < kn; ++j) x.at(i + 1, j + 1) = y.at(i, j);
    return with_identity(x);
}

GeneratorMatrix building_up(const GeneratorMatrix& g, std::span<const uint8_t> delta,
                            uint8_t epsilon, bool validate_input) {
    const size_t k = g.rank(), len = g.length();
    if (delta.size() != len) throw DimensionMismatch("delta length");
    if (gf::mul(epsilon, gf::conj(epsilon)) != negate(1)) throw BadEpsilon();
    if (herm_dot(delta, delta) != negate(1)) throw BadDelta();
    if (validate_input && !verify_hermitian_self_dual(g)) throw InputNotSelfDual();

    DenseMatrix out(g.ring(), k + 1, len + 2);
    out.at(0, 0) = 1;
    for (size_t j = 0; j < len; ++j) out.at(0, 2 + j) = delta[j];
    for (size_t i = 0; i < k; ++i) {
        const auto r = g.m.row(i);
        const uint8_t gamma = herm_dot(r, delta);
        out.at(i + 1, 0) = negate(gamma);
        out.at(i + 1, 1) = gf::mul(epsilon, gamma);
        for (size_t j = 0; j < len; ++j) out.at(i + 1, 2 + j) = r[j];
    }
    return {out};
}

}  // namespace hsd
