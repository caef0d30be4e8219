#include "stokescluster/form.hpp"

namespace sc {

void OneForm::add(VarId v, const MatrixRF& m) {
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeMismatch("one-form component");
    auto it = comp_.find(v);
    if (it == comp_.end()) {
        if (!m.is_zero()) comp_.emplace(v, m);
    } else {
        MatrixRF s = it->second + m;
        if (s.is_zero()) comp_.erase(it);
        else it->second = s;
    }
}

OneForm OneForm::operator+(const OneForm& o) const {
    if (dim_ != o.dim_) throw ShapeMismatch("one-form addition");
    OneForm r = *this;
    for (const auto& [v, m] : o.comp_) r.add(v, m);
    return r;
}

OneForm OneForm::conjugate(const MatrixRF& j) const {
    MatrixRF jinv = j.inverse();
    OneForm r(dim_);
    for (const auto& [v, m] : comp_) r.add(v, jinv * m * j);
    return r;
}

bool OneForm::is_zero() const { return comp_.empty(); }

OneForm maurer_cartan(const MatrixRF& m, MCSide side) {
    if (m.rows() != m.cols()) throw ShapeMismatch("maurer_cartan");
    OneForm r(m.rows());
    MatrixRF minv = m.inverse();
    for (VarId v : m.variables()) {
        MatrixRF d = m.derivative(v);
        r.add(v, side == MCSide::Left ? minv * d : d * minv);
    }
    return r;
}

void TwoForm::add(VarId i, VarId j, const RationalFunction& c) {
    if (i == j) throw ShapeMismatch("two-form needs distinct variables");
    if (c.is_zero()) return;
    VarId a = i, b = j;
    RationalFunction v = c;
    if (a > b) {
        std::swap(a, b);
        v = -v;
    }
    auto key = std::make_pair(a, b);
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

RationalFunction TwoForm::coefficient(VarId i, VarId j) const {
    if (i == j) return RationalFunction::zero();
    bool flip = i > j;
    auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == c_.end()) return RationalFunction::zero();
    return flip ? -it->second : it->second;
}

TwoForm TwoForm::operator+(const TwoForm& o) const {
    TwoForm r = *this;
    for (const auto& [k, c] : o.c_) r.add(k.first, k.second, c);
    return r;
}

TwoForm TwoForm::operator-(const TwoForm& o) const {
    TwoForm r = *this;
    for (const auto& [k, c] : o.c_) r.add(k.first, k.second, -c);
    return r;
}

TwoForm TwoForm::scale(const RationalFunction& c) const {
    TwoForm r;
    for (const auto& [k, v] : c_) r.add(k.first, k.second, v * c);
    return r;
}

bool TwoForm::is_zero() const { return c_.empty(); }

bool TwoForm::equals(const TwoForm& o) const {
    TwoForm d = *this - o;
    for (const auto& [k, c] : d.coefficients()) {
        (void)k;
        if (!c.is_zero()) return false;
    }
    return true;
}

TwoForm wedge_trace(const OneForm& a, const OneForm& b) {
    TwoForm r;
    for (const auto& [i, ai] : a.components())
        for (const auto& [j, bj] : b.components()) {
            if (i == j) continue;
            r.add(i, j, (ai * bj).trace());
        }
    return r;
}

LogCanonicalForm to_log_canonical(const TwoForm& f, const std::vector<VarId>& vars) {
    std::map<VarId, std::size_t> pos;
    for (std::size_t k = 0; k < vars.size(); ++k) pos[vars[k]] = k;
    LogCanonicalForm lc;
    lc.vars = vars;
    lc.coeff.assign(vars.size(), std::vector<mpq_class>(vars.size(), mpq_class(0)));
    for (const auto& [key, c] : f.coefficients()) {
        auto it = pos.find(key.first);
        auto jt = pos.find(key.second);
        if (it == pos.end() || jt == pos.end())
            throw NotLogCanonical("two-form touches a variable outside the coordinate list");
        RationalFunction scaled = c * RationalFunction::variable(key.first) *
                                  RationalFunction::variable(key.second);
        if (!scaled.is_constant())
            throw NotLogCanonical("coefficient of dlog pair (" +
                                  VarRegistry::instance().name(key.first) + ", " +
                                  VarRegistry::instance().name(key.second) +
                                  ") is not constant: " + scaled.to_string());
        mpq_class q = scaled.num().eval({}) / scaled.den().eval({});
        lc.coeff[it->second][jt->second] = q;
        lc.coeff[jt->second][it->second] = -q;
    }
    return lc;
}

std::size_t JumpGraph::add_vertex(const std::string& name) {
    names_.push_back(name);
    orders_.emplace_back();
    return names_.size() - 1;
}

std::size_t JumpGraph::add_edge(std::size_t tail, std::size_t head, const MatrixRF& jump) {
    if (tail >= names_.size() || head >= names_.size())
        throw BadVertex("edge endpoint out of range");
    tails_.push_back(tail);
    heads_.push_back(head);
    jumps_.push_back(jump);
    return jumps_.size() - 1;
}

std::size_t JumpGraph::add_ray(std::size_t tail, const MatrixRF& jump) {
    if (tail >= names_.size()) throw BadVertex("ray endpoint out of range");
    tails_.push_back(tail);
    heads_.push_back(std::nullopt);
    jumps_.push_back(jump);
    return jumps_.size() - 1;
}

void JumpGraph::set_cyclic_order(std::size_t vertex, const std::vector<HalfEdge>& order) {
    if (vertex >= names_.size()) throw BadVertex("cyclic order for unknown vertex");
    for (const auto& h : order) {
        if (h.edge >= jumps_.size()) throw BadVertex("cyclic order names unknown edge");
        std::size_t v = h.outgoing ? tails_[h.edge]
                                   : heads_[h.edge].value_or(static_cast<std::size_t>(-1));
        if (v != vertex) throw BadVertex("half-edge not incident to vertex " + names_[vertex]);
    }
    orders_[vertex] = order;
}

const std::vector<JumpGraph::HalfEdge>& JumpGraph::cyclic_order(std::size_t v) const {
    if (v >= orders_.size()) throw BadVertex("unknown vertex");
    return orders_[v];
}

MatrixRF JumpGraph::away_jump(const HalfEdge& h) const {
    return h.outgoing ? jumps_[h.edge] : jumps_[h.edge].inverse();
}

void JumpGraph::validate_vertex(std::size_t v) const {
    const auto& ord = cyclic_order(v);
    if (ord.empty()) throw BadVertex("vertex " + names_[v] + " has no cyclic order");
    MatrixRF prod = MatrixRF::identity(jumps_[ord.front().edge].rows());
    for (const auto& h : ord) prod = prod * away_jump(h);
    if (!prod.is_identity())
        throw VertexRelationViolated("vertex " + names_[v] +
                                     ": away product is " + prod.to_string());
}

void JumpGraph::validate() const {
    for (std::size_t v = 0; v < names_.size(); ++v) validate_vertex(v);
}

namespace {

using MatQ = std::vector<std::vector<mpq_class>>;

MatQ matq_zero(std::size_t n) { return MatQ(n, std::vector<mpq_class>(n, mpq_class(0))); }

MatQ matq_mul(const MatQ& a, const MatQ& b) {
    std::size_t n = a.size();
    MatQ r = matq_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

MatQ matq_inverse(MatQ a) {
    std::size_t n = a.size();
    MatQ r = matq_zero(n);
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularMatrix("numeric jump matrix is singular at the point");
        std::swap(a[piv], a[col]);
        std::swap(r[piv], r[col]);
        mpq_class d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            r[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                r[i][j] -= f * r[col][j];
            }
        }
    }
    return r;
}

mpq_class matq_trace_mul(const MatQ& a, const MatQ& b) {
    mpq_class t(0);
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j] != 0 && b[j][i] != 0) t += a[i][j] * b[j][i];
    return t;
}

} // namespace

std::vector<std::vector<mpq_class>> graph_two_form_at(const JumpGraph& g,
                                                      const std::vector<VarId>& vars,
                                                      const std::map<VarId, mpq_class>& point) {
    std::size_t nv = vars.size();
    MatQ acc = matq_zero(nv);
    std::size_t ne = g.edge_count();
    std::vector<MatQ> jn(ne), jinv(ne);
    std::vector<std::vector<MatQ>> dj(ne);
    std::vector<bool> have(ne, false);
    auto ensure = [&](std::size_t e) {
        if (have[e]) return;
        const MatrixRF& jm = g.edge_jump(e);
        jn[e] = jm.eval(point);
        jinv[e] = matq_inverse(jn[e]);
        dj[e].resize(nv);
        for (std::size_t w = 0; w < nv; ++w) dj[e][w] = jm.derivative(vars[w]).eval(point);
        have[e] = true;
    };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& ord = g.cyclic_order(v);
        if (ord.size() < 2) continue;
        std::size_t dim = g.edge_jump(ord.front().edge).rows();
        std::vector<MatQ> mck(nv, matq_zero(dim));
        for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
            std::size_t e = ord[k].edge;
            ensure(e);
            const MatQ& aw = ord[k].outgoing ? jn[e] : jinv[e];
            const MatQ& awInv = ord[k].outgoing ? jinv[e] : jn[e];
            std::vector<MatQ> mc(nv);
            for (std::size_t w = 0; w < nv; ++w) {
                if (ord[k].outgoing) {
                    mc[w] = matq_mul(jinv[e], dj[e][w]);
                } else {
                    mc[w] = matq_mul(dj[e][w], jinv[e]);
                    for (auto& row : mc[w])
                        for (auto& x : row) x = -x;
                }
                mck[w] = matq_mul(matq_mul(awInv, mck[w]), aw);
                for (std::size_t i = 0; i < dim; ++i)
                    for (std::size_t j = 0; j < dim; ++j) mck[w][i][j] += mc[w][i][j];
            }
            if (k > 0)
                for (std::size_t i = 0; i < nv; ++i)
                    for (std::size_t j = 0; j < nv; ++j)
                        if (i != j) acc[i][j] += matq_trace_mul(mck[i], mc[j]);
        }
    }
    MatQ c = matq_zero(nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            c[i][j] = (acc[i][j] - acc[j][i]) * point.at(vars[i]) * point.at(vars[j]);
            c[j][i] = -c[i][j];
        }
    return c;
}

TwoForm graph_two_form(const JumpGraph& g) {
    TwoForm total;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& ord = g.cyclic_order(v);
        if (ord.size() < 2) continue;
        std::size_t dim = g.edge_jump(ord.front().edge).rows();
        OneForm mck(dim);
        for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
            MatrixRF jk = g.away_jump(ord[k]);
            OneForm mc = maurer_cartan(jk, MCSide::Left);
            mck = mck.conjugate(jk) + mc;
            if (k > 0) total = total + wedge_trace(mck, mc);
        }
    }
    return total;
}

} // namespace sc
