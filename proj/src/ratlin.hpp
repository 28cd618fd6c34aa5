#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diopkit::ratlin {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator, which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

// Sparse vector: sorted by index, no explicit zeros.
class SparseVec {
  public:
    using Term = std::pair<int, Rat>;

    SparseVec() = default;
    explicit SparseVec(std::vector<Term> terms);

    static SparseVec unit(int index, Rat coeff = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    int leading_index() const;        // smallest index; throws if zero
    const Rat& leading_coeff() const; // coeff at leading index
    const std::vector<Term>& terms() const { return terms_; }
    Rat coeff(int index) const;
    int max_index() const; // -1 if zero

    void add_term(int index, const Rat& c); // merges, keeps order
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& axpy(const Rat& a, const SparseVec& x); // *this += a*x
    SparseVec scaled(const Rat& a) const;
    void scale(const Rat& a);
    void negate();

    bool operator==(const SparseVec& o) const { return terms_ == o.terms_; }

  private:
    std::vector<Term> terms_;
};

Rat dot(const SparseVec& a, const SparseVec& b);

// Sparse matrix, row-major.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& row(int i) const { return data_.at(i); }
    SparseVec& row(int i) { return data_.at(i); }
    void set(int i, int j, const Rat& v);
    Rat get(int i, int j) const;

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    Mat transpose() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const;

    // y = this * x, with x a sparse column vector of length cols().
    SparseVec apply(const SparseVec& x) const;
    // row-vector times matrix: r * this (r has length rows()).
    SparseVec apply_left(const SparseVec& r) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat scaled(const Rat& a) const;

    long nnz() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

// Incremental row-echelon basis. Rows are kept fully reduced against each
// other with pivot coefficient 1, so the stored rows form the canonical RREF
// basis of their span. Insertion order does not affect the final basis.
class RowBasis {
  public:
    // Residue of v modulo the current span (pivot columns eliminated).
    SparseVec reduce(SparseVec v) const;
    // Insert v; returns true if the span grew.
    bool insert(SparseVec v);
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

  private:
    std::map<int, SparseVec> rows_; // pivot column -> row
};

// Subspace of Q^ambient_dim stored as canonical RREF basis, one row per
// basis vector. Two subspaces are equal iff their stored bases are equal.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
    Subspace(int ambient_dim, const std::vector<SparseVec>& spanning);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    bool contains(const SparseVec& v) const;
    bool operator==(const Subspace& o) const;

    static Subspace full(int ambient_dim);

  private:
    int ambient_ = 0;
    Mat basis_; // RREF rows
};

int rank(const Mat& m);
// Kernel {x : m x = 0} as a canonical subspace of Q^cols.
Subspace kernel(const Mat& m);
// Orthogonal complement of s under the pairing <v,w> = v * pairing * w^T.
// Throws if the pairing is singular or shapes mismatch.
Subspace orth_complement(const Subspace& s, const Mat& pairing);

// Cochain complex: spaces C_lo, ..., C_hi with differentials
// d_k : C_k -> C_{k+1}. Composite of consecutive differentials must vanish.
class ChainComplex {
  public:
    ChainComplex() = default;
    ChainComplex(int lo, std::vector<long> dims, std::vector<Mat> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    long dim(int deg) const;
    const Mat& diff(int deg) const; // d_deg, valid for lo..hi-1
    const std::vector<long>& dims() const { return dims_; }

    void validate() const; // shapes and d.d = 0
    std::map<int, long> homology_dims() const;
    long euler_characteristic() const;

  private:
    int lo_ = 0;
    std::vector<long> dims_;
    std::vector<Mat> diffs_;
};

} // namespace diopkit::ratlin
