#ifndef STOKESCLUSTER_FORM_HPP
#define STOKESCLUSTER_FORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stokescluster/matrix.hpp"

namespace sc {

// Matrix-valued one-form sum_v A_v dv with square A_v of a fixed dimension.
class OneForm {
public:
    explicit OneForm(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    const std::map<VarId, MatrixRF>& components() const { return comp_; }
    void add(VarId v, const MatrixRF& m);
    OneForm operator+(const OneForm& o) const;
    // j^{-1} (this) j applied componentwise.
    OneForm conjugate(const MatrixRF& j) const;
    bool is_zero() const;

private:
    std::size_t dim_;
    std::map<VarId, MatrixRF> comp_;
};

enum class MCSide { Left, Right };

// Left: m^{-1} dm; right: dm m^{-1}.
OneForm maurer_cartan(const MatrixRF& m, MCSide side);

// Scalar two-form sum_{i<j} c_{ij} dv_i ∧ dv_j, keyed by ordered pairs i<j.
class TwoForm {
public:
    const std::map<std::pair<VarId, VarId>, RationalFunction>& coefficients() const {
        return c_;
    }
    // Accumulates c dv_i ∧ dv_j for any i != j; antisymmetry is folded in.
    void add(VarId i, VarId j, const RationalFunction& c);
    RationalFunction coefficient(VarId i, VarId j) const;
    TwoForm operator+(const TwoForm& o) const;
    TwoForm operator-(const TwoForm& o) const;
    TwoForm scale(const RationalFunction& c) const;
    bool is_zero() const;
    bool equals(const TwoForm& o) const;

private:
    std::map<std::pair<VarId, VarId>, RationalFunction> c_;
};

// Pairs the components of a and b through the trace: the dv_i ∧ dv_j
// coefficient (i < j) is Tr(A_i B_j) - Tr(A_j B_i).
TwoForm wedge_trace(const OneForm& a, const OneForm& b);

// Constant-coefficient presentation over dlog coordinates:
// form = sum_{i<j} coeff[i][j] dlog v_i ∧ dlog v_j with rational constants.
struct LogCanonicalForm {
    std::vector<VarId> vars;
    std::vector<std::vector<mpq_class>> coeff; // skew-symmetric
};

// Requires every dv_i ∧ dv_j coefficient times v_i v_j to be a rational
// constant, and every variable that appears to be listed in vars.
LogCanonicalForm to_log_canonical(const TwoForm& f, const std::vector<VarId>& vars);

// Oriented jump graph. Every edge stores the jump read along tail -> head;
// the jump read at the head is the inverse. Rays have no head vertex and
// contribute their jump only at the tail. Each vertex lists its incident
// half-edges in counterclockwise order.
class JumpGraph {
public:
    struct HalfEdge {
        std::size_t edge;
        bool outgoing; // true when the vertex is the edge's tail
    };

    std::size_t add_vertex(const std::string& name);
    std::size_t add_edge(std::size_t tail, std::size_t head, const MatrixRF& jump);
    std::size_t add_ray(std::size_t tail, const MatrixRF& jump);
    void set_cyclic_order(std::size_t vertex, const std::vector<HalfEdge>& order);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return jumps_.size(); }
    const std::string& vertex_name(std::size_t v) const { return names_[v]; }
    const std::vector<HalfEdge>& cyclic_order(std::size_t v) const;
    const MatrixRF& edge_jump(std::size_t e) const { return jumps_[e]; }
    std::size_t edge_tail(std::size_t e) const { return tails_[e]; }
    std::optional<std::size_t> edge_head(std::size_t e) const { return heads_[e]; }

    MatrixRF away_jump(const HalfEdge& h) const;
    // Product of away jumps in cyclic order must be the identity.
    void validate_vertex(std::size_t v) const;
    void validate() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<HalfEdge>> orders_;
    std::vector<std::size_t> tails_;
    std::vector<std::optional<std::size_t>> heads_;
    std::vector<MatrixRF> jumps_;
};

// Sum over vertices of sum_k Tr(MC(J_1..J_k) ∧ MC(J_k)) with J_k the away
// jumps in cyclic order and MC the left Maurer-Cartan form, built by the
// incremental recursion MC(K J) = J^{-1} MC(K) J + MC(J).
TwoForm graph_two_form(const JumpGraph& g);

// The same vertex sum with every jump and derivative evaluated exactly at
// the given point (values of the stored symbols). Returns the coefficient
// matrix of dlog vars[i] ∧ dlog vars[j] in stored units, the pointwise
// counterpart of to_log_canonical(graph_two_form(g), vars). Throws
// SingularMatrix or PoleAtPoint when the point degenerates a jump.
std::vector<std::vector<mpq_class>> graph_two_form_at(const JumpGraph& g,
                                                      const std::vector<VarId>& vars,
                                                      const std::map<VarId, mpq_class>& point);

} // namespace sc

#endif
