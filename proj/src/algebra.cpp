#include "ecid/algebra.hpp"

#include <sstream>

#include "ecid/errors.hpp"

namespace ecid {

AlgebraElement::AlgebraElement(FieldPtr field, Group group, std::vector<u64> coeffs)
    : field_(std::move(field)), group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (!field_) throw DomainError("algebra element: null field");
    if (coeffs_.size() != group_.order()) {
        throw DomainError("algebra element: expected " + std::to_string(group_.order()) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
    for (u64 c : coeffs_) {
        if (c >= field_->order()) throw DomainError("algebra element: coefficient outside the field");
    }
}

AlgebraElement AlgebraElement::zero(FieldPtr field, Group group) {
    const auto n = group.order();
    return {std::move(field), std::move(group), std::vector<u64>(n, 0)};
}

AlgebraElement AlgebraElement::one(FieldPtr field, Group group) {
    return basis(std::move(field), group, group.identity());
}

AlgebraElement AlgebraElement::basis(FieldPtr field, Group group, std::size_t element) {
    std::vector<u64> c(group.order(), 0);
    if (element >= c.size()) throw DomainError("algebra element: basis index out of range");
    c[element] = 1;
    return {std::move(field), std::move(group), std::move(c)};
}

AlgebraElement AlgebraElement::from_digits(FieldPtr field, Group group, const std::string& digits) {
    if (field->degree() != 1) throw DomainError("digit strings are only accepted over prime fields");
    if (field->characteristic() > 10) throw DomainError("digit strings need p <= 10");
    std::vector<u64> c;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw ParseError("digit string: unexpected character");
        const u64 v = static_cast<u64>(ch - '0');
        if (v >= field->characteristic()) throw DomainError("digit string: digit exceeds p - 1");
        c.push_back(v);
    }
    return {std::move(field), std::move(group), std::move(c)};
}

std::size_t AlgebraElement::weight() const {
    std::size_t w = 0;
    for (u64 c : coeffs_) w += c != 0;
    return w;
}

bool AlgebraElement::is_zero() const { return weight() == 0; }

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
    if (field_ != o.field_ && !field_->same_as(*o.field_)) throw MismatchError("algebra: different fields");
    if (group_.order() != o.group_.order() || group_.labels() != o.group_.labels()) {
        throw MismatchError("algebra: different groups");
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_compatible(o);
    std::vector<u64> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    return {field_, group_, std::move(c)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_compatible(o);
    std::vector<u64> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    return {field_, group_, std::move(c)};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const { return alg_mul(*this, o); }

AlgebraElement AlgebraElement::scaled(u64 scalar) const {
    std::vector<u64> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(scalar, coeffs_[i]);
    return {field_, group_, std::move(c)};
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_compatible(o);
    return coeffs_ == o.coeffs_;
}

std::string AlgebraElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t g = 0; g < coeffs_.size(); ++g) {
        if (coeffs_[g] == 0) continue;
        if (!first) out << " + ";
        first = false;
        const bool is_id = g == group_.identity();
        const std::string c = field_->format(coeffs_[g]);
        if (is_id) {
            out << c;
        } else {
            if (coeffs_[g] != 1) out << (field_->degree() > 1 ? "(" + c + ")" : c) << '*';
            out << group_.label(g);
        }
    }
    return first ? "0" : out.str();
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.field() != b.field() && !a.field()->same_as(*b.field())) throw MismatchError("algebra: different fields");
    if (a.group().order() != b.group().order() || a.group().labels() != b.group().labels()) {
        throw MismatchError("algebra: different groups");
    }
    const auto& f = *a.field();
    const auto& g = a.group();
    const std::size_t n = g.order();
    std::vector<u64> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const u64 ai = a.code(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const u64 bj = b.code(j);
            if (bj == 0) continue;
            const std::size_t k = g.mul(i, j);
            c[k] = f.add(c[k], f.mul(ai, bj));
        }
    }
    return {a.field(), g, std::move(c)};
}

bool is_idempotent(const AlgebraElement& a) { return alg_mul(a, a) == a; }

FieldElement lambda1(const AlgebraElement& a) { return a.coeff(a.group().identity()); }

Matrix right_mul_matrix(const AlgebraElement& e) {
    const auto& g = e.group();
    const std::size_t n = g.order();
    Matrix m(n, n);
    // (g * e)_{g h} = e_h
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t h = 0; h < n; ++h) m.at(row, g.mul(row, h)) = e.code(h);
    }
    return m;
}

std::size_t ideal_dimension(const AlgebraElement& e) { return matrix_rank(*e.field(), right_mul_matrix(e)); }

u64 dimension_formula_D(i64 x, u64 p) {
    if (!is_prime(p)) throw DomainError("dimension_formula_D: p must be prime");
    const i64 sp = static_cast<i64>(p);
    i64 r = x % sp;
    if (r < 0) r += sp;
    return r == 0 ? p : static_cast<u64>(r);
}

u64 dimension_formula_D_code(u64 code, u64 p) {
    if (code >= p) throw DomainError("dimension_formula_D: value is not in the prime subfield");
    return code == 0 ? p : code;
}

AlgebraElement hat_idempotent(const Group& g, std::span<const std::size_t> subgroup, FieldPtr field) {
    if (!is_subgroup(g, subgroup)) throw DomainError("hat_idempotent: index set is not a subgroup");
    if (subgroup.size() % field->characteristic() == 0) {
        throw DomainError("hat_idempotent: p divides the subgroup order");
    }
    const u64 scale = field->inv(field->from_integer(static_cast<i64>(subgroup.size() % field->characteristic())));
    std::vector<u64> c(g.order(), 0);
    for (auto h : subgroup) c[h] = scale;
    return {std::move(field), g, std::move(c)};
}

u64 order_times_lambda1(const AlgebraElement& e) {
    const auto& f = *e.field();
    return f.mul(f.from_integer(static_cast<i64>(e.group().order() % f.characteristic())), lambda1(e).code());
}

}  // namespace ecid
