#include "ecid/field.hpp"

#include <algorithm>
#include <sstream>

#include "ecid/errors.hpp"

namespace ecid {

namespace {

using Poly = std::vector<u64>;  // constant term first, over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t n = f.size() - 1;
    const u64 lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > n) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - n;
        for (std::size_t j = 0; j <= n; ++j) {
            a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e != 0) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<u64>& poly, u64 p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    if (f[0] == 0) return false;
    const Poly x{0, 1};
    // frob[k] = x^(p^k) mod f
    std::vector<Poly> frob(n + 1);
    frob[0] = poly_mod(x, f, p);
    for (std::size_t k = 1; k <= n; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
    if (poly_sub(frob[n], frob[0], p).size() != 0) return false;
    for (u64 r : prime_divisors(n)) {
        const Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

FiniteField::FiniteField(u64 p, unsigned degree, std::vector<u64> modulus)
    : p_(p), degree_(degree), q_(checked_pow(p, degree)), modulus_(std::move(modulus)) {
    if (q_ <= kTableLimit) {
        const std::size_t q = q_;
        add_table_.resize(q * q);
        mul_table_.resize(q * q);
        inv_table_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b) {
                add_table_[a * q + b] = static_cast<std::uint16_t>(add_poly(a, b));
                const u64 m = mul_poly(a, b);
                mul_table_[a * q + b] = static_cast<std::uint16_t>(m);
                if (m == 1) inv_table_[a] = b;
            }
        }
    }
}

FieldPtr FiniteField::make(u64 p, unsigned degree, std::optional<std::vector<u64>> modulus) {
    if (!is_prime(p)) throw DomainError("field: p = " + std::to_string(p) + " is not prime");
    if (degree == 0) throw DomainError("field: degree must be at least 1");
    const u64 q = checked_pow(p, degree);
    (void)q;
    std::vector<u64> chosen;
    if (modulus) {
        chosen = *modulus;
        if (chosen.size() != degree + 1 || chosen.back() != 1) {
            throw DomainError("field: modulus must be monic of degree " + std::to_string(degree));
        }
        for (u64 c : chosen) {
            if (c >= p) throw DomainError("field: modulus coefficient out of range [0, p)");
        }
        if (!is_irreducible(chosen, p)) throw DomainError("field: modulus is reducible over GF(p)");
    } else if (degree == 1) {
        chosen = {0, 1};
    } else {
        // Constant term is the most significant digit of the search order; it cannot be zero.
        chosen.assign(degree + 1, 0);
        chosen.back() = 1;
        const u64 tail = checked_pow(p, degree - 1);
        bool found = false;
        for (u64 k = tail; k < tail * p && !found; ++k) {
            u64 rest = k;
            for (unsigned i = degree; i-- > 0;) {
                chosen[i] = rest % p;
                rest /= p;
            }
            found = is_irreducible(chosen, p);
        }
        if (!found) throw DomainError("field: no irreducible polynomial found");
    }
    return FieldPtr(new FiniteField(p, degree, std::move(chosen)));
}

u64 FiniteField::add_poly(u64 a, u64 b) const {
    if (degree_ == 1) {
        const u64 s = a + b;  // both < p <= 2^63, no wrap
        return s >= p_ ? s - p_ : s;
    }
    u64 result = 0, place = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        const u64 da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        u64 d = da + db;
        if (d >= p_) d -= p_;
        result += d * place;
        if (i + 1 < degree_) place *= p_;
    }
    return result;
}

u64 FiniteField::mul_poly(u64 a, u64 b) const {
    if (degree_ == 1) return mulmod(a, b, p_);
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<u64> prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
    }
    for (std::size_t top = prod.size(); top-- > degree_;) {
        const u64 c = prod[top];
        if (c == 0) continue;
        const std::size_t shift = top - degree_;
        for (unsigned j = 0; j <= degree_; ++j) {
            prod[shift + j] = (prod[shift + j] + p_ - mulmod(c, modulus_[j], p_)) % p_;
        }
    }
    prod.resize(degree_);
    return from_coefficients(prod);
}

u64 FiniteField::add(u64 a, u64 b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_poly(a, b);
}

u64 FiniteField::neg(u64 a) const {
    if (degree_ == 1) return a == 0 ? 0 : p_ - a;
    auto c = coefficients(a);
    for (auto& d : c) d = d == 0 ? 0 : p_ - d;
    return from_coefficients(c);
}

u64 FiniteField::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FiniteField::mul(u64 a, u64 b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_poly(a, b);
}

u64 FiniteField::pow(u64 a, u64 e) const {
    u64 result = 1;
    while (e != 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

u64 FiniteField::inv(u64 a) const {
    if (a == 0) throw DomainError("field: inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

u64 FiniteField::from_integer(i64 n) const {
    const i64 sp = static_cast<i64>(p_);
    i64 r = n % sp;
    if (r < 0) r += sp;
    return static_cast<u64>(r);
}

std::vector<u64> FiniteField::coefficients(u64 code) const {
    std::vector<u64> c(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = code % p_;
        code /= p_;
    }
    return c;
}

u64 FiniteField::from_coefficients(std::span<const u64> coeffs) const {
    if (coeffs.size() > degree_) throw DomainError("field: too many coefficients for element");
    u64 code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
    return code;
}

std::string FiniteField::format(u64 code, const std::string& var) const {
    if (code == 0) return "0";
    const auto c = coefficients(code);
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << c[i];
        } else {
            if (c[i] != 1) out << c[i];
            out << var;
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

FieldElement::FieldElement(FieldPtr field, u64 code) : field_(std::move(field)), code_(code) {
    if (!field_) throw DomainError("field element: null field");
    if (code_ >= field_->order()) throw DomainError("field element: code out of range");
}

FieldElement FieldElement::from_coefficients(FieldPtr field, std::span<const u64> coeffs) {
    for (u64 c : coeffs) {
        if (c >= field->characteristic()) throw DomainError("field element: coefficient out of range [0, p)");
    }
    const u64 code = field->from_coefficients(coeffs);
    return {std::move(field), code};
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_ && !field_->same_as(*o.field_)) {
        throw MismatchError("field element: operands belong to different fields");
    }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(u64 e) const { return {field_, field_->pow(code_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    return code_ == o.code_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

std::vector<std::size_t> row_reduce(const FiniteField& field, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) {
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(rank, k));
        }
        const u64 scale = field.inv(m.at(rank, c));
        for (std::size_t k = c; k < m.cols; ++k) m.at(rank, k) = field.mul(scale, m.at(rank, k));
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, c) == 0) continue;
            const u64 factor = field.neg(m.at(r, c));
            for (std::size_t k = c; k < m.cols; ++k) {
                m.at(r, k) = field.add(m.at(r, k), field.mul(factor, m.at(rank, k)));
            }
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;
}

std::size_t matrix_rank(const FiniteField& field, Matrix m) { return row_reduce(field, m).size(); }

std::size_t matrix_rank(std::span<const std::vector<FieldElement>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    FieldPtr field;
    for (const auto& row : rows) {
        if (row.size() != cols) throw DomainError("matrix_rank: ragged rows");
        for (const auto& x : row) {
            if (!field) {
                field = x.field();
            } else if (field != x.field() && !field->same_as(*x.field())) {
                throw MismatchError("matrix_rank: entries from different fields");
            }
        }
    }
    if (!field) return 0;
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c].code();
    }
    return matrix_rank(*field, std::move(m));
}

Matrix matrix_multiply(const FiniteField& field, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw DomainError("matrix_multiply: shape mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const u64 x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                out.at(i, j) = field.add(out.at(i, j), field.mul(x, b.at(k, j)));
            }
        }
    }
    return out;
}

}  // namespace ecid
