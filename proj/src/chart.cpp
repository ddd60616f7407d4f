#include "contactred/chart.hpp"

namespace contactred {

Chart Chart::symplectic(int n) {
    if (n < 1) throw std::invalid_argument("symplectic chart requires n >= 1");
    return Chart(ChartKind::Symplectic, n);
}

Chart Chart::contact(int n) {
    if (n < 0) throw std::invalid_argument("contact chart requires n >= 0");
    return Chart(ChartKind::Contact, n);
}

Chart Chart::symplectified(int n) {
    if (n < 0) throw std::invalid_argument("symplectified chart requires n >= 0");
    return Chart(ChartKind::Symplectified, n);
}

int Chart::dim() const {
    switch (kind_) {
        case ChartKind::Symplectic:    return 2 * n_;
        case ChartKind::Contact:       return 2 * n_ + 1;
        case ChartKind::Symplectified: return 2 * n_ + 2;
    }
    return 0;
}

int Chart::q_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("q index out of range");
    return i;
}

int Chart::p_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("p index out of range");
    return n_ + i;
}

int Chart::z_index() const {
    if (!has_z()) throw std::logic_error("symplectic chart has no z coordinate");
    return 2 * n_;
}

int Chart::t_index() const {
    if (!has_t()) throw std::logic_error("only symplectified charts carry t");
    return 2 * n_ + 1;
}

std::string Chart::coord_name(int idx) const {
    if (idx < 0 || idx >= dim()) throw std::out_of_range("coordinate index out of range");
    if (idx < n_) return n_ == 1 ? "q" : "q" + std::to_string(idx + 1);
    if (idx < 2 * n_) return n_ == 1 ? "p" : "p" + std::to_string(idx - n_ + 1);
    return idx == 2 * n_ ? "z" : "t";
}

Chart Chart::base() const {
    if (kind_ != ChartKind::Symplectified)
        throw std::logic_error("base() is defined for symplectified charts only");
    return Chart::contact(n_);
}

std::string to_string(ChartKind kind) {
    switch (kind) {
        case ChartKind::Symplectic:    return "symplectic";
        case ChartKind::Contact:       return "contact";
        case ChartKind::Symplectified: return "symplectified";
    }
    return "?";
}

void require_kind(const Chart& chart, ChartKind kind, const char* op) {
    if (chart.kind() != kind)
        throw ChartMismatch(std::string(op) + " requires a " + to_string(kind) +
                            " chart, got " + to_string(chart.kind()));
}

void require_same_chart(const Chart& a, const Chart& b, const char* op) {
    if (a != b)
        throw ChartMismatch(std::string(op) + ": arguments live on different charts (" +
                            to_string(a.kind()) + " n=" + std::to_string(a.dof()) + " vs " +
                            to_string(b.kind()) + " n=" + std::to_string(b.dof()) + ")");
}

} // namespace contactred
