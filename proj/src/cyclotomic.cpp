#include "catrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace catrep {

namespace {

// ---- integer polynomial helpers (low degree first) ----

std::vector<long long> poly_x_pow_minus_one(int n) {
    std::vector<long long> f(size_t(n) + 1, 0);
    f[0] = -1;
    f[size_t(n)] = 1;
    return f;
}

// exact division of integer polynomials, divisor monic
std::vector<long long> poly_divide_exact(std::vector<long long> a, const std::vector<long long>& b) {
    int db = int(b.size()) - 1;
    int da = int(a.size()) - 1;
    std::vector<long long> q(size_t(da - db) + 1, 0);
    for (int d = da; d >= db; --d) {
        long long c = a[size_t(d)];
        if (c == 0) continue;
        q[size_t(d - db)] = c;
        for (int i = 0; i <= db; ++i) a[size_t(d - db + i)] -= c * b[size_t(i)];
    }
    for (long long c : a)
        if (c != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

// ---- rational polynomial helpers ----

using RPoly = std::vector<Rational>;

int rdeg(const RPoly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (!p[size_t(i)].is_zero()) return i;
    return -1;
}

RPoly rtrim(RPoly p) {
    p.resize(size_t(std::max(rdeg(p), 0)) + 1);
    return p;
}

RPoly rmul(const RPoly& a, const RPoly& b) {
    if (rdeg(a) < 0 || rdeg(b) < 0) return RPoly{Rational(0)};
    RPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

RPoly rsub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// division with remainder; divisor need not be monic
std::pair<RPoly, RPoly> rdivmod(RPoly a, const RPoly& b) {
    int db = rdeg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    Rational lead_inv = b[size_t(db)].inverse();
    RPoly q(size_t(std::max(rdeg(a) - db, 0)) + 1, Rational(0));
    for (int d = rdeg(a); d >= db; d = rdeg(a)) {
        Rational c = a[size_t(d)] * lead_inv;
        q[size_t(d - db)] = c;
        for (int i = 0; i <= db; ++i) a[size_t(d - db + i)] -= c * b[size_t(i)];
    }
    return {rtrim(q), rtrim(a)};
}

// reduce mod the monic integer polynomial phi
RPoly rreduce(RPoly a, const std::vector<long long>& phi) {
    int dp = int(phi.size()) - 1;
    for (int d = rdeg(a); d >= dp; d = rdeg(a)) {
        Rational c = a[size_t(d)];
        for (int i = 0; i <= dp; ++i) a[size_t(d - dp + i)] -= c * Rational(phi[size_t(i)]);
    }
    a.resize(size_t(dp), Rational(0));
    return a;
}

} // namespace

int euler_phi(int n) {
    if (n <= 0) throw std::domain_error("euler_phi of non-positive integer");
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<int> stack{n};
    while (!stack.empty()) {
        int m = stack.back();
        if (cache.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        std::vector<long long> f = poly_x_pow_minus_one(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) f = poly_divide_exact(std::move(f), cache.at(d));
        cache.emplace(m, std::move(f));
    }
    return cache.at(n);
}

// ---- CycNumber ----

CycNumber::CycNumber(const Rational& r, int conductor) : conductor_(conductor) {
    if (conductor < 1) throw std::domain_error("conductor must be positive");
    coeffs_.assign(size_t(euler_phi(conductor)), Rational(0));
    coeffs_[0] = r;
    if (conductor == 1) {
        // basis is {1} with Phi_1 = x - 1; nothing to reduce
    }
}

CycNumber CycNumber::from_coeffs(int conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) throw std::domain_error("conductor must be positive");
    const auto& phi = cyclotomic_polynomial(conductor);
    CycNumber r;
    r.conductor_ = conductor;
    coeffs.resize(std::max(coeffs.size(), phi.size() - 1), Rational(0));
    r.coeffs_ = rreduce(std::move(coeffs), phi);
    return r;
}

CycNumber CycNumber::root_of_unity(int n, long long k) {
    if (n < 1) throw std::domain_error("root_of_unity: order must be positive");
    long long e = ((k % n) + n) % n;
    std::vector<Rational> c(size_t(e) + 1, Rational(0));
    c[size_t(e)] = Rational(1);
    return from_coeffs(n, std::move(c));
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycNumber::rational_part() const { return coeffs_[0]; }

CycNumber CycNumber::embed(int m) const {
    if (m == conductor_) return *this;
    if (m < 1 || m % conductor_ != 0)
        throw std::domain_error("embed: target conductor not divisible by source");
    int step = m / conductor_;
    std::vector<Rational> c(size_t(coeffs_.size() - 1) * size_t(step) + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k * size_t(step)] = coeffs_[k];
    return from_coeffs(m, std::move(c));
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CycNumber x = a.embed(m), y = b.embed(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CycNumber x = a.embed(m), y = b.embed(m);
    return CycNumber::from_coeffs(m, rmul(x.coeffs_, y.coeffs_));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    // extended Euclid: u*a + v*Phi = gcd (a nonzero ensures gcd is a nonzero constant)
    const auto& phi_i = cyclotomic_polynomial(conductor_);
    RPoly r0(phi_i.size());
    for (size_t i = 0; i < phi_i.size(); ++i) r0[i] = Rational(phi_i[i]);
    RPoly r1 = rtrim(coeffs_);
    RPoly u0{Rational(0)}, u1{Rational(1)};
    while (rdeg(r1) > 0) {
        auto [q, r2] = rdivmod(r0, r1);
        RPoly u2 = rsub(u0, rmul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (rdeg(r1) != 0) throw std::logic_error("cyclotomic inverse: gcd degree > 0");
    Rational g_inv = r1[0].inverse();
    for (auto& c : u1) c *= g_inv;
    return from_coeffs(conductor_, std::move(u1));
}

CycNumber CycNumber::conj() const {
    std::vector<Rational> c(size_t(conductor_), Rational(0));
    c.resize(std::max<size_t>(c.size(), coeffs_.size()), Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        size_t e = k == 0 ? 0 : size_t(conductor_) - k;
        c[e] += coeffs_[k];
    }
    return from_coeffs(conductor_, std::move(c));
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    int m = std::lcm(a.conductor_, b.conductor_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].str();
        if (k > 0) os << "*z" << conductor_ << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

// ---- CycMatrix ----

CycMatrix::CycMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      ent_(size_t(rows) * size_t(cols), CycNumber::zero(conductor)) {
    if (rows < 0 || cols < 0) throw std::domain_error("negative matrix dimension");
}

CycMatrix CycMatrix::identity(int n, int conductor) {
    CycMatrix m(n, n, conductor);
    for (int i = 0; i < n; ++i) m.set(i, i, CycNumber::one(conductor));
    return m;
}

CycMatrix CycMatrix::zero(int rows, int cols, int conductor) { return CycMatrix(rows, cols, conductor); }

void CycMatrix::set(int i, int j, const CycNumber& v) {
    size_t idx = size_t(i) * cols_ + j;
    if (v.conductor() == conductor_) {
        ent_[idx] = v;
        return;
    }
    if (conductor_ % v.conductor() == 0) {
        ent_[idx] = v.embed(conductor_);
        return;
    }
    int m = std::lcm(conductor_, v.conductor());
    *this = embed(m);
    ent_[size_t(i) * cols_ + j] = v.embed(m);
}

CycMatrix CycMatrix::embed(int m) const {
    if (m == conductor_) return *this;
    CycMatrix r(rows_, cols_, m);
    for (size_t i = 0; i < ent_.size(); ++i) r.ent_[i] = ent_[i].embed(m);
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(cols_, rows_, conductor_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

CycMatrix CycMatrix::operator-() const {
    CycMatrix r = *this;
    for (auto& e : r.ent_) e = -e;
    return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    int m = std::lcm(a.conductor_, b.conductor_);
    CycMatrix x = a.embed(m), y = b.embed(m);
    for (size_t i = 0; i < x.ent_.size(); ++i) x.ent_[i] += y.ent_[i];
    return x;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) { return a + (-b); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    int m = std::lcm(a.conductor_, b.conductor_);
    CycMatrix x = a.embed(m), y = b.embed(m);
    CycMatrix r(a.rows_, b.cols_, m);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const CycNumber& aik = x.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.ent_[size_t(i) * r.cols_ + j] += aik * y.at(k, j);
            }
        }
    return r;
}

CycMatrix CycMatrix::scaled(const CycNumber& c) const {
    int m = std::lcm(conductor_, c.conductor());
    CycMatrix r = embed(m);
    CycNumber cc = c.embed(m);
    for (auto& e : r.ent_) e *= cc;
    return r;
}

CycMatrix CycMatrix::kron(const CycMatrix& b) const {
    int m = std::lcm(conductor_, b.conductor_);
    CycMatrix x = embed(m), y = b.embed(m);
    CycMatrix r(rows_ * b.rows_, cols_ * b.cols_, m);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int j1 = 0; j1 < cols_; ++j1) {
            if (x.at(i1, j1).is_zero()) continue;
            for (int i2 = 0; i2 < b.rows_; ++i2)
                for (int j2 = 0; j2 < b.cols_; ++j2)
                    r.set(i1 * b.rows_ + i2, j1 * b.cols_ + j2, x.at(i1, j1) * y.at(i2, j2));
        }
    return r;
}

bool CycMatrix::is_zero() const {
    for (const auto& e : ent_)
        if (!e.is_zero()) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    int m = std::lcm(a.conductor_, b.conductor_);
    CycMatrix x = a.embed(m), y = b.embed(m);
    return x.ent_ == y.ent_;
}

RankNullspace CycMatrix::rank_nullspace() const {
    CycMatrix work = *this;
    std::vector<std::pair<int, int>> pivots; // (row, col)
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (!work.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) {
                CycNumber t = work.at(r, j);
                work.set(r, j, work.at(pr, j));
                work.set(pr, j, t);
            }
        CycNumber pinv = work.at(r, c).inverse();
        for (int j = c; j < cols_; ++j) work.set(r, j, work.at(r, j) * pinv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            CycNumber f = work.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols_; ++j) work.set(i, j, work.at(i, j) - f * work.at(r, j));
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    RankNullspace result;
    result.rank = r;
    std::vector<bool> is_pivot(size_t(cols_), false);
    for (auto [pr, pc] : pivots) is_pivot[size_t(pc)] = true;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[size_t(f)]) continue;
        CycMatrix v(cols_, 1, work.conductor_);
        v.set(f, 0, CycNumber::one(work.conductor_));
        for (auto [pr, pc] : pivots) v.set(pc, 0, -work.at(pr, f));
        result.nullspace.push_back(std::move(v));
    }
    return result;
}

int CycMatrix::rank() const { return rank_nullspace().rank; }

bool CycMatrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

CycMatrix CycMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    CycMatrix aug(n, 2 * n, conductor_);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, CycNumber::one(conductor_));
    }
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (!aug.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) throw std::domain_error("inverse of singular matrix");
        if (pr != r)
            for (int j = 0; j < 2 * n; ++j) {
                CycNumber t = aug.at(r, j);
                aug.set(r, j, aug.at(pr, j));
                aug.set(pr, j, t);
            }
        CycNumber pinv = aug.at(r, c).inverse();
        for (int j = 0; j < 2 * n; ++j) aug.set(r, j, aug.at(r, j) * pinv);
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            CycNumber f = aug.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < 2 * n; ++j) aug.set(i, j, aug.at(i, j) - f * aug.at(r, j));
        }
        ++r;
    }
    CycMatrix inv(n, n, aug.conductor_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
    return inv;
}

std::string CycMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

} // namespace catrep
