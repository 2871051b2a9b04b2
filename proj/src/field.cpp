#include "fixcode/field.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace fixcode {

std::uint32_t Field::default_modulus(unsigned r) {
    // x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x^2+1
    static constexpr std::array<std::uint32_t, 9> moduli{0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D};
    if (r < 1 || r > 8) throw std::invalid_argument("Field: degree must be in [1, 8], got " + std::to_string(r));
    return moduli[r];
}

Field::Field(unsigned r) : r_(r), q_(1u << r), modulus_(default_modulus(r)) {
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    Element x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        if (log_[x] != -1) throw std::logic_error("Field: modulus is not primitive");
        exp_[i] = exp_[i + q_ - 1] = x;
        log_[x] = static_cast<int>(i);
        x <<= 1;
        if (x & q_) x ^= modulus_;
    }
    mul_.assign(std::size_t{q_} * q_, 0);
    for (Element a = 1; a < q_; ++a)
        for (Element b = 1; b < q_; ++b) mul_[a * q_ + b] = exp_[log_[a] + log_[b]];
}

std::shared_ptr<const Field> Field::get(unsigned r) {
    static std::array<std::shared_ptr<const Field>, 9> cache;
    static std::mutex mutex;
    default_modulus(r);
    std::lock_guard lock(mutex);
    if (!cache[r]) cache[r] = std::make_shared<const Field>(r);
    return cache[r];
}

Field::Element Field::inv(Element a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    return exp_[(q_ - 1 - static_cast<std::uint32_t>(log_[a])) % (q_ - 1)];
}

Field::Element Field::pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field::Element Field::mul_slow(Element a, Element b) const {
    Element acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & q_) a ^= modulus_;
    }
    return acc;
}

// ---------------------------------------------------------------------------

FqMatrix::FqMatrix(FieldPtr field, std::size_t m) : field_(std::move(field)), m_(m), a_(m * m, 0) {}

FqMatrix::FqMatrix(FieldPtr field, std::size_t m, std::vector<Element> entries)
    : field_(std::move(field)), m_(m), a_(std::move(entries)) {
    if (a_.size() != m_ * m_) throw std::invalid_argument("FqMatrix: expected m*m entries");
    for (auto e : a_)
        if (e >= field_->order()) throw std::invalid_argument("FqMatrix: entry outside the field");
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t m) {
    FqMatrix id(std::move(field), m);
    for (std::size_t i = 0; i < m; ++i) id.a_[i * m + i] = 1;
    return id;
}

FqMatrix FqMatrix::from_key(FieldPtr field, std::size_t m, std::uint64_t key) {
    FqMatrix out(std::move(field), m);
    const unsigned r = out.field_->degree();
    const std::uint64_t mask = out.field_->order() - 1;
    for (std::size_t e = 0; e < m * m; ++e) out.a_[e] = static_cast<Element>((key >> (r * e)) & mask);
    return out;
}

void FqMatrix::set(std::size_t i, std::size_t j, Element v) {
    if (v >= field_->order()) throw std::invalid_argument("FqMatrix::set: entry outside the field");
    a_[i * m_ + j] = v;
}

FqMatrix::Element FqMatrix::det() const {
    std::vector<Element> a = a_;
    const Field& f = *field_;
    Element d = 1;
    for (std::size_t c = 0; c < m_; ++c) {
        std::size_t p = c;
        while (p < m_ && a[p * m_ + c] == 0) ++p;
        if (p == m_) return 0;
        if (p != c)
            for (std::size_t j = 0; j < m_; ++j) std::swap(a[p * m_ + j], a[c * m_ + j]);  // sign is +1 in char 2
        const Element piv = a[c * m_ + c];
        d = f.mul(d, piv);
        const Element piv_inv = f.inv(piv);
        for (std::size_t i = c + 1; i < m_; ++i) {
            const Element factor = f.mul(a[i * m_ + c], piv_inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < m_; ++j) a[i * m_ + j] ^= f.mul(factor, a[c * m_ + j]);
        }
    }
    return d;
}

FqMatrix FqMatrix::inverse() const {
    const Field& f = *field_;
    std::vector<Element> a = a_;
    FqMatrix inv = identity(field_, m_);
    auto& b = inv.a_;
    for (std::size_t c = 0; c < m_; ++c) {
        std::size_t p = c;
        while (p < m_ && a[p * m_ + c] == 0) ++p;
        if (p == m_) throw std::domain_error("FqMatrix::inverse: singular matrix");
        for (std::size_t j = 0; j < m_; ++j) {
            std::swap(a[p * m_ + j], a[c * m_ + j]);
            std::swap(b[p * m_ + j], b[c * m_ + j]);
        }
        const Element s = f.inv(a[c * m_ + c]);
        for (std::size_t j = 0; j < m_; ++j) {
            a[c * m_ + j] = f.mul(s, a[c * m_ + j]);
            b[c * m_ + j] = f.mul(s, b[c * m_ + j]);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const Element factor = a[i * m_ + c];
            if (i == c || factor == 0) continue;
            for (std::size_t j = 0; j < m_; ++j) {
                a[i * m_ + j] ^= f.mul(factor, a[c * m_ + j]);
                b[i * m_ + j] ^= f.mul(factor, b[c * m_ + j]);
            }
        }
    }
    return inv;
}

FqMatrix FqMatrix::add_identity() const {
    FqMatrix out = *this;
    for (std::size_t i = 0; i < m_; ++i) out.a_[i * m_ + i] ^= 1;
    return out;
}

bool FqMatrix::is_identity() const {
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j)
            if (a_[i * m_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

std::uint64_t FqMatrix::key() const {
    const unsigned r = field_->degree();
    if (r * m_ * m_ > 64) throw std::length_error("FqMatrix::key: matrix does not fit in 64 bits");
    std::uint64_t k = 0;
    for (std::size_t e = 0; e < a_.size(); ++e) k |= std::uint64_t{a_[e]} << (r * e);
    return k;
}

std::string FqMatrix::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const unsigned width = (field_->degree() + 3) / 4;
    std::string s;
    for (std::size_t i = 0; i < m_; ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < m_; ++j) {
            const Element v = a_[i * m_ + j];
            for (unsigned d = width; d-- > 0;) s += kDigits[(v >> (4 * d)) & 0xF];
        }
    }
    return s;
}

std::vector<FqMatrix::Element> FqMatrix::apply(std::span<const Element> x) const {
    if (x.size() != m_) throw std::invalid_argument("FqMatrix::apply: size mismatch");
    std::vector<Element> y(m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) y[i] ^= field_->mul(a_[i * m_ + j], x[j]);
    return y;
}

namespace {
void require_compatible(const FqMatrix& a, const FqMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("FqMatrix: size mismatch");
    if (a.field().degree() != b.field().degree()) throw std::invalid_argument("FqMatrix: field mismatch");
}
}  // namespace

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
    require_compatible(a, b);
    const std::size_t m = a.m_;
    const Field& f = *a.field_;
    FqMatrix c(a.field_, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const auto aik = a.a_[i * m + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c.a_[i * m + j] ^= f.mul(aik, b.a_[k * m + j]);
        }
    return c;
}

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
    require_compatible(a, b);
    FqMatrix c = a;
    for (std::size_t e = 0; e < c.a_.size(); ++e) c.a_[e] ^= b.a_[e];
    return c;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.m_ == b.m_ && a.field_->degree() == b.field_->degree() && a.a_ == b.a_;
}

bool operator<(const FqMatrix& a, const FqMatrix& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    // Compare as the packed key: the highest entry index is most significant.
    for (std::size_t e = a.a_.size(); e-- > 0;)
        if (a.a_[e] != b.a_[e]) return a.a_[e] < b.a_[e];
    return false;
}

// ---------------------------------------------------------------------------

BitMatrix flatten(const FqMatrix& h) {
    const Field& f = h.field();
    const unsigned r = f.degree();
    const std::size_t m = h.size();
    const std::size_t d = r * m;
    BitMatrix out(d, d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (unsigned b = 0; b < r; ++b) {
                const auto image = f.mul(h(i, j), Field::Element{1} << b);
                for (unsigned a = 0; a < r; ++a)
                    if ((image >> a) & 1u) out.set(r * i + a, r * j + b, true);
            }
    return out;
}

std::vector<std::uint64_t> flatten_rows(const FqMatrix& h) {
    const std::size_t d = h.field().degree() * h.size();
    if (d > 64) throw std::length_error("flatten_rows: r*m exceeds 64");
    const BitMatrix full = flatten(h);
    std::vector<std::uint64_t> rows(d, 0);
    for (std::size_t i = 0; i < d; ++i) rows[i] = full.row(i).words().empty() ? 0 : full.row(i).words()[0];
    return rows;
}

PointIndex point_index(const Field& field, std::span<const Field::Element> v) {
    const unsigned r = field.degree();
    if (r * v.size() > 64) throw std::length_error("point_index: point does not fit in 64 bits");
    PointIndex idx = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] >= field.order()) throw std::invalid_argument("point_index: coordinate outside the field");
        idx |= PointIndex{v[j]} << (r * j);
    }
    return idx;
}

std::vector<Field::Element> point_unindex(const Field& field, std::size_t m, PointIndex index) {
    const unsigned r = field.degree();
    if (r * m < 64 && (index >> (r * m)) != 0) throw std::out_of_range("point_unindex: index out of range");
    std::vector<Field::Element> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = static_cast<Field::Element>((index >> (r * j)) & (field.order() - 1));
    return v;
}

}  // namespace fixcode
