#include "catrep/twovect.hpp"

#include <numeric>
#include <stdexcept>

namespace catrep {

NatMatrix NatMatrix::identity(int n) {
    NatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

NatMatrix NatMatrix::permutation(const std::vector<int>& sigma) {
    int n = int(sigma.size());
    NatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, sigma[size_t(i)]) = 1;
    return m;
}

bool NatMatrix::is_permutation() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i) {
        long long row_sum = 0;
        for (int j = 0; j < cols; ++j) {
            if (at(i, j) != 0 && at(i, j) != 1) return false;
            row_sum += at(i, j);
        }
        if (row_sum != 1) return false;
    }
    for (int j = 0; j < cols; ++j) {
        long long col_sum = 0;
        for (int i = 0; i < rows; ++i) col_sum += at(i, j);
        if (col_sum != 1) return false;
    }
    return true;
}

NatMatrix NatMatrix::transpose() const {
    NatMatrix m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

TwoMorphism make_two_morphism(NatMatrix source, NatMatrix target, std::vector<CycMatrix> blocks) {
    if (source.rows != target.rows || source.cols != target.cols)
        throw std::invalid_argument("two-morphism: source/target shape mismatch");
    if (blocks.size() != size_t(source.rows) * size_t(source.cols))
        throw std::invalid_argument("two-morphism: wrong number of blocks");
    for (int i = 0; i < source.rows; ++i)
        for (int j = 0; j < source.cols; ++j) {
            const CycMatrix& b = blocks[size_t(i) * source.cols + j];
            if (b.rows() != source.at(i, j) || b.cols() != target.at(i, j))
                throw std::invalid_argument("two-morphism: block (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") has wrong dimensions");
        }
    return TwoMorphism{std::move(source), std::move(target), std::move(blocks)};
}

TwoMorphism two_identity(const NatMatrix& a, int conductor) {
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(a.rows) * size_t(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) blocks.push_back(CycMatrix::identity(int(a.at(i, j)), conductor));
    return TwoMorphism{a, a, std::move(blocks)};
}

TwoMorphism two_zero(const NatMatrix& a, const NatMatrix& b, int conductor) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("zero 2-morphism: shape mismatch");
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(a.rows) * size_t(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            blocks.push_back(CycMatrix::zero(int(a.at(i, j)), int(b.at(i, j)), conductor));
    return TwoMorphism{a, b, std::move(blocks)};
}

bool two_equal(const TwoMorphism& a, const TwoMorphism& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    for (size_t k = 0; k < a.blocks.size(); ++k)
        if (a.blocks[k] != b.blocks[k]) return false;
    return true;
}

TwoMorphism vcompose(const TwoMorphism& a, const TwoMorphism& b) {
    if (!(a.target == b.source)) throw std::invalid_argument("vcompose: target/source mismatch");
    std::vector<CycMatrix> blocks;
    blocks.reserve(a.blocks.size());
    for (size_t k = 0; k < a.blocks.size(); ++k) blocks.push_back(a.blocks[k] * b.blocks[k]);
    return TwoMorphism{a.source, b.target, std::move(blocks)};
}

NatMatrix hcompose1(const NatMatrix& a, const NatMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("hcompose1: shape mismatch");
    NatMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            long long v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

namespace {

// writes src into dst starting at (r0, c0)
void place(CycMatrix& dst, const CycMatrix& src, int r0, int c0) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) dst.set(r0 + i, c0 + j, src.at(i, j));
}

} // namespace

TwoMorphism hcompose2(const TwoMorphism& a, const TwoMorphism& b) {
    if (a.source.cols != b.source.rows) throw std::invalid_argument("hcompose2: shape mismatch");
    int mid = a.source.cols;
    NatMatrix src = hcompose1(a.source, b.source);
    NatMatrix tgt = hcompose1(a.target, b.target);
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(src.rows) * size_t(src.cols));
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) {
            CycMatrix cell(int(src.at(i, j)), int(tgt.at(i, j)));
            int r0 = 0, c0 = 0;
            for (int k = 0; k < mid; ++k) {
                CycMatrix kron = a.block(i, k).kron(b.block(k, j));
                place(cell, kron, r0, c0);
                r0 += kron.rows();
                c0 += kron.cols();
            }
            blocks.push_back(std::move(cell));
        }
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

TwoMorphism associator(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c) {
    if (a.cols != b.rows || b.cols != c.rows) throw std::invalid_argument("associator: shape mismatch");
    NatMatrix bc = hcompose1(b, c);
    NatMatrix ab = hcompose1(a, b);
    NatMatrix src = hcompose1(a, bc);
    NatMatrix tgt = hcompose1(ab, c);
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(src.rows) * size_t(src.cols));
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) {
            int n = int(src.at(i, j));
            CycMatrix cell(n, n);
            int src_idx = 0;
            for (int k = 0; k < a.cols; ++k)
                for (long long r = 0; r < a.at(i, k); ++r)
                    for (int l = 0; l < b.cols; ++l)
                        for (long long s = 0; s < b.at(k, l); ++s)
                            for (long long t = 0; t < c.at(l, j); ++t) {
                                // target basis: block l ascending, then (k, r, s) within (ab)^i_l, then t
                                long long off_l = 0;
                                for (int l2 = 0; l2 < l; ++l2) off_l += ab.at(i, l2) * c.at(l2, j);
                                long long off_k = 0;
                                for (int k2 = 0; k2 < k; ++k2) off_k += a.at(i, k2) * b.at(k2, l);
                                long long u = off_k + r * b.at(k, l) + s;
                                long long tgt_idx = off_l + u * c.at(l, j) + t;
                                cell.set(src_idx, int(tgt_idx), CycNumber::one());
                                ++src_idx;
                            }
            blocks.push_back(std::move(cell));
        }
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

TwoMorphism associator_inverse(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c) {
    TwoMorphism al = associator(a, b, c);
    std::vector<CycMatrix> blocks;
    blocks.reserve(al.blocks.size());
    for (const auto& blk : al.blocks) blocks.push_back(blk.transpose());
    return TwoMorphism{al.target, al.source, std::move(blocks)};
}

long long boxtimes_obj(long long n, long long m) { return n * m; }

NatMatrix boxtimes_nat(const NatMatrix& a, const NatMatrix& b) {
    NatMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (int i1 = 0; i1 < a.rows; ++i1)
        for (int i2 = 0; i2 < b.rows; ++i2)
            for (int j1 = 0; j1 < a.cols; ++j1)
                for (int j2 = 0; j2 < b.cols; ++j2)
                    r.at(i1 * b.rows + i2, j1 * b.cols + j2) = a.at(i1, j1) * b.at(i2, j2);
    return r;
}

TwoMorphism boxtimes_two(const TwoMorphism& a, const TwoMorphism& b) {
    NatMatrix src = boxtimes_nat(a.source, b.source);
    NatMatrix tgt = boxtimes_nat(a.target, b.target);
    // (i1,i2,j1,j2) nesting below is exactly row-major order over the product grid
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(src.rows) * size_t(src.cols));
    for (int i1 = 0; i1 < a.source.rows; ++i1)
        for (int i2 = 0; i2 < b.source.rows; ++i2)
            for (int j1 = 0; j1 < a.source.cols; ++j1)
                for (int j2 = 0; j2 < b.source.cols; ++j2) blocks.push_back(a.block(i1, j1).kron(b.block(i2, j2)));
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

TwoMorphism tensorator(const NatMatrix& a, const NatMatrix& b, const NatMatrix& c, const NatMatrix& d) {
    if (a.cols != c.rows || b.cols != d.rows) throw std::invalid_argument("tensorator: shape mismatch");
    NatMatrix ab = boxtimes_nat(a, b);
    NatMatrix cd = boxtimes_nat(c, d);
    NatMatrix ac = hcompose1(a, c);
    NatMatrix bd = hcompose1(b, d);
    NatMatrix src = hcompose1(ab, cd);
    NatMatrix tgt = boxtimes_nat(ac, bd);
    if (!(src == tgt)) throw std::logic_error("tensorator: mixed product failed");
    std::vector<CycMatrix> blocks(size_t(src.rows) * size_t(src.cols));
    for (int i1 = 0; i1 < a.rows; ++i1)
        for (int i2 = 0; i2 < b.rows; ++i2)
            for (int j1 = 0; j1 < c.cols; ++j1)
                for (int j2 = 0; j2 < d.cols; ++j2) {
                    int i = i1 * b.rows + i2, j = j1 * d.cols + j2;
                    int n = int(src.at(i, j));
                    CycMatrix cell(n, n);
                    int src_idx = 0;
                    for (int k1 = 0; k1 < a.cols; ++k1)
                        for (int k2 = 0; k2 < b.cols; ++k2)
                            for (long long r1 = 0; r1 < a.at(i1, k1); ++r1)
                                for (long long r2 = 0; r2 < b.at(i2, k2); ++r2)
                                    for (long long s1 = 0; s1 < c.at(k1, j1); ++s1)
                                        for (long long s2 = 0; s2 < d.at(k2, j2); ++s2) {
                                            long long off_u = 0;
                                            for (int k = 0; k < k1; ++k) off_u += a.at(i1, k) * c.at(k, j1);
                                            long long u = off_u + r1 * c.at(k1, j1) + s1;
                                            long long off_v = 0;
                                            for (int k = 0; k < k2; ++k) off_v += b.at(i2, k) * d.at(k, j2);
                                            long long v = off_v + r2 * d.at(k2, j2) + s2;
                                            long long tgt_idx = u * bd.at(i2, j2) + v;
                                            cell.set(src_idx, int(tgt_idx), CycNumber::one());
                                            ++src_idx;
                                        }
                    blocks[size_t(i) * size_t(src.cols) + size_t(j)] = std::move(cell);
                }
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

long long boxplus_obj(long long n, long long m) { return n + m; }

NatMatrix boxplus_nat(const NatMatrix& a, const NatMatrix& b) {
    NatMatrix r(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
    return r;
}

TwoMorphism boxplus_two(const TwoMorphism& a, const TwoMorphism& b) {
    NatMatrix src = boxplus_nat(a.source, b.source);
    NatMatrix tgt = boxplus_nat(a.target, b.target);
    TwoMorphism r = two_zero(src, tgt);
    for (int i = 0; i < a.source.rows; ++i)
        for (int j = 0; j < a.source.cols; ++j) r.block(i, j) = a.block(i, j);
    for (int i = 0; i < b.source.rows; ++i)
        for (int j = 0; j < b.source.cols; ++j) r.block(a.source.rows + i, a.source.cols + j) = b.block(i, j);
    return r;
}

NatMatrix dsum_nat(const NatMatrix& a, const NatMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("direct sum: shape mismatch");
    NatMatrix r = a;
    for (size_t k = 0; k < r.ent.size(); ++k) r.ent[k] += b.ent[k];
    return r;
}

TwoMorphism dsum_two(const TwoMorphism& a, const TwoMorphism& b) {
    NatMatrix src = dsum_nat(a.source, b.source);
    NatMatrix tgt = dsum_nat(a.target, b.target);
    std::vector<CycMatrix> blocks;
    blocks.reserve(size_t(src.rows) * size_t(src.cols));
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) {
            CycMatrix cell(int(src.at(i, j)), int(tgt.at(i, j)));
            place(cell, a.block(i, j), 0, 0);
            place(cell, b.block(i, j), a.block(i, j).rows(), a.block(i, j).cols());
            blocks.push_back(std::move(cell));
        }
    return TwoMorphism{std::move(src), std::move(tgt), std::move(blocks)};
}

TwoMorphism add_two(const TwoMorphism& a, const TwoMorphism& b) {
    if (!(a.source == b.source) || !(a.target == b.target))
        throw std::invalid_argument("sum of 2-morphisms: shape mismatch");
    std::vector<CycMatrix> blocks;
    blocks.reserve(a.blocks.size());
    for (size_t k = 0; k < a.blocks.size(); ++k) blocks.push_back(a.blocks[k] + b.blocks[k]);
    return TwoMorphism{a.source, a.target, std::move(blocks)};
}

TwoMorphism vinverse(const TwoMorphism& a) {
    if (!(a.source == a.target))
        throw std::invalid_argument("vinverse: 2-morphism is not an endo-shaped isomorphism");
    std::vector<CycMatrix> blocks;
    blocks.reserve(a.blocks.size());
    for (const auto& blk : a.blocks) blocks.push_back(blk.inverse());
    return TwoMorphism{a.target, a.source, std::move(blocks)};
}

bool gl_check(const NatMatrix& a) { return a.rows == a.cols && a.is_permutation(); }

bool gl_check(const TwoMorphism& a) {
    if (!(a.source == a.target)) return false;
    for (const auto& blk : a.blocks)
        if (!blk.is_invertible()) return false;
    return true;
}

XModPtr gl_crossed_module(int n, int mu) { return wreath_xmod(n, mu); }

} // namespace catrep
