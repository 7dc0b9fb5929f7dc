#include "affwhit/rootdata.hpp"

#include <algorithm>
#include <cctype>

namespace affwhit::roots {

// ------------------------------------------------------------------- Root

bool Root::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

int Root::height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

Root Root::operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
}

Root Root::operator+(const Root& o) const {
    Root r = *this;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += o.coeffs[k];
    return r;
}

std::string Root::label() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        int c = coeffs[k];
        if (c == 0) continue;
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "a" + std::to_string(k + 1);
    }
    return out;
}

Root parse_root(const std::string& label, int rank) {
    Root r{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    if (label == "0") return r;
    std::size_t pos = 0;
    auto fail = [&] { throw ParseError("bad root label '" + label + "'"); };
    if (label.empty()) fail();
    while (pos < label.size()) {
        int sign = 1;
        if (label[pos] == '+' || label[pos] == '-') {
            sign = label[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail();
        }
        int mult = 0;
        while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos])))
            mult = mult * 10 + (label[pos++] - '0');
        if (mult == 0) mult = 1;
        if (pos >= label.size() || label[pos] != 'a') fail();
        ++pos;
        int idx = 0;
        bool any = false;
        while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
            idx = idx * 10 + (label[pos++] - '0');
            any = true;
        }
        if (!any || idx < 1 || idx > rank) fail();
        r.coeffs[static_cast<std::size_t>(idx - 1)] += sign * mult;
    }
    return r;
}

// --------------------------------------------------------- ChevalleyElement

ChevalleyElement::ChevalleyElement(Basis b, Scalar c) {
    if (c != 0) terms_.emplace(b, std::move(c));
}

Scalar ChevalleyElement::coeff(Basis b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void ChevalleyElement::add(Basis b, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChevalleyElement& ChevalleyElement::operator+=(const ChevalleyElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

ChevalleyElement ChevalleyElement::operator+(const ChevalleyElement& o) const {
    ChevalleyElement r = *this;
    r += o;
    return r;
}

ChevalleyElement ChevalleyElement::operator-(const ChevalleyElement& o) const {
    return *this + o * Scalar(-1);
}

ChevalleyElement ChevalleyElement::operator*(const Scalar& c) const {
    ChevalleyElement r;
    if (c == 0) return r;
    for (const auto& [b, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), b, x * c);
    return r;
}

// --------------------------------------------------------------- RootDatum

namespace {

struct Unit {
    int i, j, c;
};

// matrix units making up a basis element
std::vector<Unit> expand(Basis b) {
    if (b.is_cartan()) return {{b.row, b.row, 1}, {b.row + 1, b.row + 1, -1}};
    return {{b.row, b.col, 1}};
}

} // namespace

RootDatum::RootDatum(int n, std::set<int> levi) : n_(n), levi_(std::move(levi)) {
    if (n < 2) throw Error("sl(n) needs n >= 2");
    for (int k : levi_)
        if (k < 1 || k > rank()) throw Error("levi index " + std::to_string(k) + " out of range");
    if (static_cast<int>(levi_.size()) == rank()) throw ImproperParabolic();

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) roots_.push_back(root_of(Basis::root_vector(i, j)));
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() > b.height();
        return a.coeffs > b.coeffs;
    });

    auto outside_levi = [&](const Root& r) {
        for (int k = 0; k < rank(); ++k)
            if (r.coeffs[static_cast<std::size_t>(k)] != 0 && !levi_.count(k + 1)) return true;
        return false;
    };
    std::set<Root> rootset(roots_.begin(), roots_.end());
    for (const auto& r : roots_) {
        if (r.is_positive() && outside_levi(r)) nil_.push_back(r);
        if (!outside_levi(r)) levi_roots_.push_back(r);
    }

    // lower central series n_i = [n, n_{i-1}]; root spaces are lines and
    // [X_b, X_c] != 0 exactly when b + c is a root
    std::vector<std::set<Root>> series{std::set<Root>(nil_.begin(), nil_.end())};
    while (!series.back().empty()) {
        std::set<Root> next;
        for (const auto& b : nil_)
            for (const auto& c : series.back())
                if (rootset.count(b + c)) next.insert(b + c);
        series.push_back(std::move(next));
    }
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        std::vector<Root> layer;
        for (const auto& r : nil_)
            if (series[i].count(r) && !series[i + 1].count(r)) layer.push_back(r);
        for (const auto& r : layer) stratum_.emplace(r, static_cast<int>(i));
        strata_.push_back(std::move(layer));
    }
    for (const auto& r : nil_) (stratum_of(r) == 0 ? nil0_ : nil1_).push_back(r);

    // dense ranks for root_order
    std::vector<Root> domain{Root{std::vector<int>(static_cast<std::size_t>(rank()), 0)}};
    for (const auto& r : nil_) domain.push_back(-r);
    for (const auto& r : levi_roots_) domain.push_back(r);
    std::sort(domain.begin(), domain.end(),
              [&](const Root& a, const Root& b) { return root_order(a, b) < 0; });
    for (std::size_t k = 0; k < domain.size(); ++k) rank_.emplace(domain[k], static_cast<int>(k));
}

int RootDatum::stratum_of(const Root& r) const {
    auto it = stratum_.find(r);
    return it == stratum_.end() ? -1 : it->second;
}

bool RootDatum::is_levi_root(const Root& r) const {
    return std::find(levi_roots_.begin(), levi_roots_.end(), r) != levi_roots_.end();
}

Root RootDatum::root_of(Basis b) const {
    Root r{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
    if (b.is_cartan()) return r;
    int lo = std::min(b.row, b.col), hi = std::max(b.row, b.col);
    int sign = b.row < b.col ? 1 : -1;
    for (int k = lo; k < hi; ++k) r.coeffs[static_cast<std::size_t>(k)] = sign;
    return r;
}

Basis RootDatum::basis_of(const Root& r) const {
    if (static_cast<int>(r.coeffs.size()) != rank()) throw Error("root of wrong rank");
    int first = -1, last = -1, sign = 0;
    for (int k = 0; k < rank(); ++k) {
        int c = r.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (first < 0) {
            first = k;
            sign = c;
        }
        if (c != sign || (last >= 0 && last != k - 1) || std::abs(c) != 1)
            throw Error("not a root of sl(n): " + r.label());
        last = k;
    }
    if (first < 0) throw Error("the zero weight has no root vector");
    return sign > 0 ? Basis::root_vector(first, last + 1) : Basis::root_vector(last + 1, first);
}

Root RootDatum::simple_root(int k) const {
    Root r{std::vector<int>(static_cast<std::size_t>(rank()), 0)};
    r.coeffs.at(static_cast<std::size_t>(k - 1)) = 1;
    return r;
}

std::vector<Basis> RootDatum::basis() const {
    std::vector<Basis> out;
    for (const auto& r : roots_) out.push_back(basis_of(r));
    for (int k = 1; k <= rank(); ++k) out.push_back(Basis::cartan(k));
    return out;
}

ChevalleyElement RootDatum::bracket(Basis a, Basis b) const {
    std::map<std::pair<int, int>, int> acc;
    for (const auto& x : expand(a))
        for (const auto& y : expand(b)) {
            int c = x.c * y.c;
            if (x.j == y.i) acc[{x.i, y.j}] += c;
            if (y.j == x.i) acc[{y.i, x.j}] -= c;
        }
    ChevalleyElement out;
    std::vector<int> diag(static_cast<std::size_t>(n_), 0);
    for (const auto& [ij, c] : acc) {
        if (c == 0) continue;
        if (ij.first == ij.second)
            diag[static_cast<std::size_t>(ij.first)] += c;
        else
            out.add(Basis::root_vector(ij.first, ij.second), Scalar(c));
    }
    // diag(d) = sum_k (d_1 + ... + d_k) H_k for traceless d
    int partial = 0;
    for (int k = 1; k <= rank(); ++k) {
        partial += diag[static_cast<std::size_t>(k - 1)];
        out.add(Basis::cartan(k), Scalar(partial));
    }
    return out;
}

ChevalleyElement RootDatum::bracket(const ChevalleyElement& x, const ChevalleyElement& y) const {
    ChevalleyElement out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out += bracket(a, b) * (ca * cb);
    return out;
}

Scalar RootDatum::killing(Basis a, Basis b) const {
    int tr = 0;
    for (const auto& x : expand(a))
        for (const auto& y : expand(b))
            if (x.j == y.i && y.j == x.i) tr += x.c * y.c;
    return Scalar(2 * n_ * tr);
}

Scalar RootDatum::killing(const ChevalleyElement& x, const ChevalleyElement& y) const {
    Scalar acc = 0;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) acc += killing(a, b) * ca * cb;
    return acc;
}

int RootDatum::root_value(const Root& alpha, Basis h) const {
    int r = h.row;  // H_{r+1}
    int v = 0;
    for (int m = 0; m < rank(); ++m) {
        int c = alpha.coeffs[static_cast<std::size_t>(m)];
        if (m == r)
            v += 2 * c;
        else if (std::abs(m - r) == 1)
            v -= c;
    }
    return v;
}

int RootDatum::group_of(const Root& r) const {
    const int top = static_cast<int>(strata_.size());
    if (r.is_zero() || is_levi_root(r)) return top;
    int s = stratum_of(-r);
    if (s >= 0 && !r.is_positive()) return top - 1 - s;
    throw OutOfDomain("root " + r.label() + " is not in (Phi u {0}) \\ Phi_n");
}

std::strong_ordering RootDatum::root_order(const Root& a, const Root& b) const {
    if (auto c = group_of(a) <=> group_of(b); c != 0) return c;
    if (auto c = a.height() <=> b.height(); c != 0) return c;
    return a.coeffs <=> b.coeffs;
}

int RootDatum::root_rank(const Root& r) const {
    auto it = rank_.find(r);
    if (it == rank_.end()) throw OutOfDomain("root " + r.label() + " is not in (Phi u {0}) \\ Phi_n");
    return it->second;
}

std::string RootDatum::render(Basis b) const {
    if (b.is_cartan()) return "H[" + std::to_string(b.cartan_index()) + "]";
    return "X[" + root_of(b).label() + "]";
}

} // namespace affwhit::roots
