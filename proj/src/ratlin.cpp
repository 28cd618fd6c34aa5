#include "ratlin.hpp"

#include <algorithm>
#include <sstream>

namespace diopkit::ratlin {

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

SparseVec::SparseVec(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) add_term(t.first, t.second);
}

SparseVec SparseVec::unit(int index, Rat coeff) {
    SparseVec v;
    if (coeff != 0) v.terms_.emplace_back(index, std::move(coeff));
    return v;
}

int SparseVec::leading_index() const {
    if (terms_.empty()) throw std::logic_error("leading_index of zero vector");
    return terms_.front().first;
}

const Rat& SparseVec::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero vector");
    return terms_.front().second;
}

Rat SparseVec::coeff(int index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, int i) { return t.first < i; });
    if (it != terms_.end() && it->first == index) return it->second;
    return Rat(0);
}

int SparseVec::max_index() const { return terms_.empty() ? -1 : terms_.back().first; }

void SparseVec::add_term(int index, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, int i) { return t.first < i; });
    if (it != terms_.end() && it->first == index) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {index, c});
    }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) { return axpy(Rat(1), o); }

SparseVec& SparseVec::axpy(const Rat& a, const SparseVec& x) {
    if (a == 0 || x.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + x.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < x.terms_.size()) {
        if (j == x.terms_.size() ||
            (i < terms_.size() && terms_[i].first < x.terms_[j].first)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || x.terms_[j].first < terms_[i].first) {
            Rat c = a * x.terms_[j].second;
            if (c != 0) merged.emplace_back(x.terms_[j].first, std::move(c));
            ++j;
        } else {
            Rat c = terms_[i].second + a * x.terms_[j].second;
            if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

SparseVec SparseVec::scaled(const Rat& a) const {
    SparseVec r;
    if (a == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, a * t.second);
    return r;
}

void SparseVec::scale(const Rat& a) {
    if (a == 0) {
        terms_.clear();
        return;
    }
    for (auto& t : terms_) t.second *= a;
}

void SparseVec::negate() {
    for (auto& t : terms_) t.second = -t.second;
}

Rat dot(const SparseVec& a, const SparseVec& b) {
    Rat acc(0);
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].first < tb[j].first)
            ++i;
        else if (tb[j].first < ta[i].first)
            ++j;
        else {
            acc += ta[i].second * tb[j].second;
            ++i;
            ++j;
        }
    }
    return acc;
}

void Mat::set(int i, int j, const Rat& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat::set");
    auto& r = data_[i];
    SparseVec nv;
    bool placed = false;
    for (const auto& t : r.terms()) {
        if (t.first == j) {
            if (v != 0) nv.add_term(j, v);
            placed = true;
        } else {
            nv.add_term(t.first, t.second);
        }
    }
    if (!placed && v != 0) nv.add_term(j, v);
    r = std::move(nv);
}

Rat Mat::get(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat::get");
    return data_[i].coeff(j);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = SparseVec::unit(i);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& term : data_[i].terms()) t.data_[term.first].add_term(i, term.second);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& r : data_)
        if (!r.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseVec Mat::apply(const SparseVec& x) const {
    // (this * x)_i = sum_j this[i][j] x_j; iterate columns of x via rows of transpose
    // is wasteful; instead accumulate row dot products lazily over nonzero rows.
    SparseVec y;
    for (int i = 0; i < rows_; ++i) {
        Rat v = dot(data_[i], x);
        if (v != 0) y.add_term(i, v);
    }
    return y;
}

SparseVec Mat::apply_left(const SparseVec& r) const {
    SparseVec y;
    for (const auto& t : r.terms()) y.axpy(t.second, data_.at(t.first));
    return y;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) r.data_[i] = o.apply_left(data_[i]);
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r = *this;
    for (int i = 0; i < rows_; ++i) r.data_[i] += o.data_[i];
    return r;
}

Mat Mat::scaled(const Rat& a) const {
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) r.data_[i] = data_[i].scaled(a);
    return r;
}

long Mat::nnz() const {
    long n = 0;
    for (const auto& r : data_) n += static_cast<long>(r.terms().size());
    return n;
}

SparseVec RowBasis::reduce(SparseVec v) const {
    // Stored rows have support {pivot} + non-pivot columns, so eliminating all
    // pivots present in v with their original coefficients needs one pass.
    SparseVec out = v;
    for (const auto& t : v.terms()) {
        auto it = rows_.find(t.first);
        if (it != rows_.end()) out.axpy(-t.second, it->second);
    }
    return out;
}

bool RowBasis::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    Rat inv = 1 / v.leading_coeff();
    v.scale(inv);
    int p = v.leading_index();
    for (auto& [piv, row] : rows_) {
        Rat c = row.coeff(p);
        if (c != 0) row.axpy(-c, v);
    }
    rows_.emplace(p, std::move(v));
    return true;
}

Subspace::Subspace(int ambient_dim, const std::vector<SparseVec>& spanning)
    : ambient_(ambient_dim) {
    RowBasis rb;
    for (const auto& v : spanning) {
        if (!v.is_zero() && v.max_index() >= ambient_dim)
            throw std::invalid_argument("Subspace: vector exceeds ambient dimension");
        rb.insert(v);
    }
    basis_ = Mat(rb.rank(), ambient_dim);
    int i = 0;
    for (const auto& [piv, row] : rb.rows()) basis_.row(i++) = row;
}

bool Subspace::contains(const SparseVec& v) const {
    RowBasis rb;
    for (int i = 0; i < basis_.rows(); ++i) rb.insert(basis_.row(i));
    return rb.contains(v);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<SparseVec> rows;
    rows.reserve(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) rows.push_back(SparseVec::unit(i));
    return Subspace(ambient_dim, rows);
}

int rank(const Mat& m) {
    RowBasis rb;
    for (int i = 0; i < m.rows(); ++i) rb.insert(m.row(i));
    return rb.rank();
}

Subspace kernel(const Mat& m) {
    RowBasis rb;
    for (int i = 0; i < m.rows(); ++i) rb.insert(m.row(i));
    std::vector<SparseVec> rows;
    for (int c = 0; c < m.cols(); ++c) {
        if (rb.rows().count(c)) continue; // pivot column
        SparseVec v = SparseVec::unit(c);
        for (const auto& [piv, row] : rb.rows()) {
            Rat coef = row.coeff(c);
            if (coef != 0) v.add_term(piv, -coef);
        }
        rows.push_back(std::move(v));
    }
    return Subspace(m.cols(), rows);
}

Subspace orth_complement(const Subspace& s, const Mat& pairing) {
    if (pairing.rows() != pairing.cols())
        throw std::invalid_argument("orth_complement: pairing must be square");
    if (s.ambient_dim() != pairing.rows())
        throw std::invalid_argument("orth_complement: ambient dimension mismatch");
    if (rank(pairing) != pairing.rows())
        throw std::invalid_argument("orth_complement: singular pairing");
    Mat constraints(s.dim(), pairing.cols());
    for (int i = 0; i < s.dim(); ++i) constraints.row(i) = pairing.apply_left(s.basis().row(i));
    return kernel(constraints);
}

ChainComplex::ChainComplex(int lo, std::vector<long> dims, std::vector<Mat> diffs)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (diffs_.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need one differential per adjacent pair");
    validate();
}

long ChainComplex::dim(int deg) const {
    if (deg < lo_ || deg > hi()) return 0;
    return dims_[deg - lo_];
}

const Mat& ChainComplex::diff(int deg) const {
    if (deg < lo_ || deg >= hi()) throw std::out_of_range("ChainComplex::diff");
    return diffs_[deg - lo_];
}

void ChainComplex::validate() const {
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].cols() != dims_[k] || diffs_[k].rows() != dims_[k + 1])
            throw std::logic_error("ChainComplex: differential shape mismatch");
        if (k + 1 < diffs_.size()) {
            if (!(diffs_[k + 1] * diffs_[k]).is_zero())
                throw std::logic_error("ChainComplex: d.d != 0");
        }
    }
}

std::map<int, long> ChainComplex::homology_dims() const {
    std::map<int, long> h;
    std::vector<long> ranks(diffs_.size(), 0);
    for (std::size_t k = 0; k < diffs_.size(); ++k) ranks[k] = rank(diffs_[k]);
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        long r_out = k < diffs_.size() ? ranks[k] : 0;
        long r_in = k > 0 ? ranks[k - 1] : 0;
        h[lo_ + static_cast<int>(k)] = dims_[k] - r_out - r_in;
    }
    // rank-nullity bookkeeping: alternating sums must agree
    long euler_dims = 0, euler_h = 0, sign = 1;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        long s = (lo_ + static_cast<int>(k)) % 2 == 0 ? 1 : -1;
        euler_dims += s * dims_[k];
        euler_h += s * h.at(lo_ + static_cast<int>(k));
    }
    (void)sign;
    if (euler_dims != euler_h)
        throw std::logic_error("ChainComplex: Euler characteristic mismatch");
    return h;
}

long ChainComplex::euler_characteristic() const {
    long e = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        long s = (lo_ + static_cast<int>(k)) % 2 == 0 ? 1 : -1;
        e += s * dims_[k];
    }
    return e;
}

} // namespace diopkit::ratlin
