#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace rcpsdp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Packed storage for one block-diagonal symmetric matrix: dense blocks as
/// row-major size*size runs, diagonal blocks as size runs. All matrices of a
/// problem share one layout, so the F(x) accumulation is a flat kernel sweep.
using Packed = std::vector<double>;

struct BlockSpec {
    int size = 0;          // rows of this block
    bool diagonal = false; // true: only the diagonal is stored
    std::size_t offset = 0;
    std::size_t count = 0; // doubles stored
};

class BlockLayout {
public:
    BlockLayout() = default;

    static BlockLayout dense(int dim) {
        BlockLayout l;
        l.add_dense(dim);
        return l;
    }

    void add_dense(int size);
    void add_diagonal(int size);

    int dim() const { return dim_; }
    std::size_t packed_size() const { return packed_; }
    const std::vector<BlockSpec>& blocks() const { return blocks_; }

    Eigen::Map<const Mat> dense_view(const Packed& m, const BlockSpec& b) const {
        return Eigen::Map<const Mat>(m.data() + b.offset, b.size, b.size);
    }
    Eigen::Map<Mat> dense_view(Packed& m, const BlockSpec& b) const {
        return Eigen::Map<Mat>(m.data() + b.offset, b.size, b.size);
    }

    /// Scatter the packed data into one dim x dim dense matrix (tests, I/O).
    Mat to_dense(const Packed& m) const;

    bool operator==(const BlockLayout&) const = default;

private:
    std::vector<BlockSpec> blocks_;
    int dim_ = 0;
    std::size_t packed_ = 0;
};

/// min c'x  s.t.  F(x) = F0 + sum_i x_i F_i <= 0 (negative semidefinite).
/// The F_i are exactly symmetric; the constructor symmetrizes dense blocks.
struct LmiProblem {
    int n = 0;   // variables
    int dim = 0; // total matrix dimension
    Vec c;
    BlockLayout layout;
    std::vector<Packed> F; // n+1 packed matrices F0..Fn

    static LmiProblem create(Vec c, BlockLayout layout, std::vector<Packed> F);
};

/// Scratch buffers for evaluation and feasibility checks; one per caller,
/// reusable across calls on the same problem.
struct EvalWork {
    Packed s;                 // holds F(x)
    std::vector<double> chol; // per-block factor scratch
    std::string diagnostic;   // set when a check short-circuits

    void resize_for(const LmiProblem& p);
};

/// F(x) = F0 + sum_i x_i F_i, written into work.s.
void eval_F_into(const LmiProblem& p, const Vec& x, EvalWork& work);

/// Allocating convenience wrapper around eval_F_into.
Packed eval_F(const LmiProblem& p, const Vec& x);

/// sum_i v_i F_i (no F0 term): the pencil direction matrix B with
/// F(y + t v) = F(y) + t B.
void dir_matrix_into(const LmiProblem& p, const Vec& v, Packed& out);

/// Attempts a Cholesky factorization of -M block by block; true iff M is
/// strictly negative definite. `spd_shift` is added to the diagonal of -M.
bool packed_neg_definite(const BlockLayout& layout, const Packed& m,
                         std::vector<double>& chol_scratch,
                         double spd_shift = 0.0);

/// Strict feasibility F(x) < 0 via Cholesky of -F(x). Zero shift: points
/// with a near-zero maximal eigenvalue count as infeasible. Non-finite x
/// returns false and records a diagnostic in work.
bool is_strictly_feasible(const LmiProblem& p, const Vec& x, EvalWork& work);
bool is_strictly_feasible(const LmiProblem& p, const Vec& x);

/// c . (x - z'); a point survives the cut iff the value is <= 0.
double cut_value(const Vec& c, const Vec& z_prime, const Vec& x);

/// All cuts share the objective direction, so the stack collapses to the
/// tightest threshold on c'x. tighten() enforces monotone tightening.
class CutStack {
public:
    bool empty() const { return !active_; }
    double threshold() const { return threshold_; }
    int depth() const { return depth_; }

    void tighten(double t);

    bool survives(double c_dot_x) const {
        return !active_ || c_dot_x <= threshold_;
    }

private:
    bool active_ = false;
    double threshold_ = std::numeric_limits<double>::infinity();
    int depth_ = 0;
};

} // namespace rcpsdp
