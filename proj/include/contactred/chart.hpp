#pragma once

#include <stdexcept>
#include <string>

namespace contactred {

enum class ChartKind { Symplectic, Contact, Symplectified };

/**
 * A global Darboux coordinate model with a fixed layout contract:
 * the q-block comes first, then the p-block, then z (contact and
 * symplectified charts), then t (symplectified charts only).
 *
 *   Symplectic     dim 2n     (q^1..q^n, p_1..p_n)
 *   Contact        dim 2n+1   (q^1..q^n, p_1..p_n, z)
 *   Symplectified  dim 2n+2   (q^1..q^n, p_1..p_n, z, t)
 *
 * Contact and symplectified charts admit n = 0 (pure (z) resp. (z,t)
 * coordinates); these arise as fully reduced systems. Symplectic charts
 * require n >= 1.
 */
class Chart {
public:
    static Chart symplectic(int n);
    static Chart contact(int n);
    static Chart symplectified(int n);

    ChartKind kind() const { return kind_; }
    /// Degrees of freedom n (size of the q- and p-blocks).
    int dof() const { return n_; }
    int dim() const;

    bool has_z() const { return kind_ != ChartKind::Symplectic; }
    bool has_t() const { return kind_ == ChartKind::Symplectified; }

    int q_index(int i) const;   // 0 <= i < n
    int p_index(int i) const;
    int z_index() const;
    int t_index() const;

    /// Coordinate name for CSV headers: q,p (n=1) or q1..qn,p1..pn, then z, t.
    std::string coord_name(int idx) const;

    /// The contact chart this symplectified chart was built over.
    Chart base() const;

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    Chart(ChartKind kind, int n) : kind_(kind), n_(n) {}
    ChartKind kind_;
    int n_;
};

std::string to_string(ChartKind kind);

/// Thrown when an operation is applied on the wrong chart kind or when
/// two arguments live on different charts.
class ChartMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void require_kind(const Chart& chart, ChartKind kind, const char* op);
void require_same_chart(const Chart& a, const Chart& b, const char* op);

} // namespace contactred
