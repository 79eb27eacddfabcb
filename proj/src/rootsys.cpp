#include "iwc/rootsys.hpp"

#include "iwc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace iwc {

// SimpleType

SimpleType SimpleType::parse(const std::string& text) {
    if (text.size() < 2) throw ConfigError("bad type string '" + text + "' (expected e.g. A2, B3)");
    SimpleType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    const std::string digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ConfigError("bad type string '" + text + "'");
    t.rank = std::stoi(digits);
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case 'A': ok = n >= 1; break;
        case 'B':
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 3; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: throw ConfigError("unknown family in '" + text + "'");
    }
    if (!ok) throw ConfigError("inadmissible rank for type '" + text + "'");
    return t;
}

// Weight

Weight::Weight(std::initializer_list<long> coords) {
    for (long x : coords) c_.emplace_back(x);
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.c_[i] = 1;
    return w;
}

bool Weight::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return iwc::is_integral(x); });
}

bool Weight::is_dominant() const {
    return is_integral() && std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    r += o;
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    r -= o;
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight& Weight::operator+=(const Weight& o) {
    if (o.c_.size() != c_.size()) throw InternalError("Weight: rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.c_.size() != c_.size()) throw InternalError("Weight: rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight operator*(const Rational& s, const Weight& w) {
    Weight r = w;
    for (auto& x : r.c_) x *= s;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << to_string(c_[i]);
    os << ']';
    return os.str();
}

// Subsets

SimpleSubset parse_subset(const std::string& text, int rank) {
    SimpleSubset out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty()) continue;
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ConfigError("bad index '" + token + "' in subset '" + text + "'");
        const int k = std::stoi(token);
        if (k < 1 || k > rank)
            throw ConfigError("index " + token + " out of range 1.." + std::to_string(rank));
        out.push_back(k - 1);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ConfigError("repeated index in subset '" + text + "'");
    return out;
}

std::string subset_str(const SimpleSubset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

// RootSystem

RootSystem::RootSystem(SimpleType t) : type_(t) {
    SimpleType::parse(t.name());  // admissibility
    build_cartan();
    build_roots();
}

RootSystem build_root_system(SimpleType t) { return RootSystem(t); }

void RootSystem::build_cartan() {
    const int n = type_.rank;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto link = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
    switch (type_.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            cartan_[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            cartan_[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            link(0, 1);
            link(2, 3);
            cartan_[1][2] = -1;
            cartan_[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case 'G':
            cartan_[0][1] = -3;  // alpha_1 short
            cartan_[1][0] = -1;
            break;
        default: throw ConfigError("unknown family");
    }

    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
    auto inv = inverse(a);
    if (!inv) throw InternalError("singular Cartan matrix");
    inverse_cartan_ = *inv;

    // d_i A_ij = d_j A_ji on the (connected) Dynkin diagram.
    sym_.assign(n, Rational(0));
    sym_[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || sym_[j] != 0) continue;
            sym_[j] = sym_[i] * cartan_[i][j] / cartan_[j][i];
            stack.push_back(j);
        }
    }
    const Rational mx = *std::max_element(sym_.begin(), sym_.end());
    for (auto& d : sym_) d /= mx;

    form_ = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) form_(i, j) = sym_[i] * cartan_[i][j];

    deg_coeffs_.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) deg_coeffs_[i] += 2 * inverse_cartan_(j, i);
}

void RootSystem::build_roots() {
    const int n = type_.rank;
    std::set<Root> known;
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        level.push_back(r);
        known.insert(r);
    }
    std::vector<Root> all;
    while (!level.empty()) {
        std::sort(level.begin(), level.end(), std::greater<>());
        all.insert(all.end(), level.begin(), level.end());
        std::set<Root> next;
        for (const Root& b : level) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * b[j];
                int p = 0;
                Root down = b;
                while (true) {
                    down[i] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    Root up = b;
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        known.insert(level.begin(), level.end());
    }
    positive_ = std::move(all);
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
    if (positive_.size() != classical_positive_count(type_))
        throw InternalError("root closure produced " + std::to_string(positive_.size()) + " roots for " +
                            type_.name());
}

std::size_t RootSystem::classical_positive_count(SimpleType t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: throw ConfigError("unknown family");
    }
}

int RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
    if (positive_index(r) >= 0) return true;
    Root neg = r;
    for (auto& x : neg) x = -x;
    return positive_index(neg) >= 0;
}

int RootSystem::height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

Rational RootSystem::half_norm(const Root& r) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += form_(i, j) * r[i] * r[j];
    return s / 2;
}

std::vector<int> RootSystem::coroot(const Root& r) const {
    // alpha^vee = sum_i (d_i / d_alpha) k_i alpha_i^vee
    const Rational d = half_norm(r);
    std::vector<int> c(rank());
    for (int i = 0; i < rank(); ++i) {
        Rational x = sym_[i] * r[i] / d;
        if (!iwc::is_integral(x)) throw InternalError("non-integral coroot coefficient");
        c[i] = static_cast<int>(x.get_num().get_si());
    }
    return c;
}

Weight RootSystem::root_weight(const Root& r) const {
    Weight w(rank());
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * r[j];
    return w;
}

Weight RootSystem::simple_root(int i) const {
    Root r(rank(), 0);
    r[i] = 1;
    return root_weight(r);
}

Vec RootSystem::to_root_coords(const Weight& w) const { return inverse_cartan_ * w.coords(); }

Weight RootSystem::from_root_coords(const Vec& c) const {
    Weight w(rank());
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * c[j];
    return w;
}

Weight RootSystem::rho() const {
    Weight w(rank());
    for (int i = 0; i < rank(); ++i) w[i] = 1;
    return w;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
    // (a, alpha_j) = d_j a_j, so (a, b) = sum_j d_j a_j (b in root coords)_j
    const Vec rb = to_root_coords(b);
    Rational s = 0;
    for (int j = 0; j < rank(); ++j) s += sym_[j] * a[j] * rb[j];
    return s;
}

Rational RootSystem::pairing(const Root& coroot_of, const Weight& w) const {
    const auto c = coroot(coroot_of);
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += c[i] * w[i];
    return s;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
    Weight r = w;
    const Rational k = w[i];
    if (k == 0) return r;
    for (int j = 0; j < rank(); ++j) r[j] -= k * cartan_[j][i];
    return r;
}

std::vector<int> RootSystem::longest_word(const SimpleSubset& sub) const {
    Weight w(rank());
    for (int i : sub) w[i] = 1;
    std::vector<int> word;
    while (true) {
        int pick = -1;
        for (int i : sub)
            if (w[i] > 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        w = reflect(pick, w);
        word.push_back(pick);
        if (word.size() > positive_.size()) throw InternalError("longest_word: descent did not terminate");
    }
    return word;
}

Weight RootSystem::apply_w0(const SimpleSubset& sub, const Weight& w) const {
    Weight r = w;
    for (int i : longest_word(sub)) r = reflect(i, r);
    return r;
}

Weight RootSystem::apply_w0(const Weight& w) const {
    SimpleSubset all(rank());
    std::iota(all.begin(), all.end(), 0);
    return apply_w0(all, w);
}

Rational RootSystem::deg_functional(const Weight& w) const {
    Rational s = 0;
    for (int i = 0; i < rank(); ++i) s += deg_coeffs_[i] * w[i];
    return s;
}

std::int64_t RootSystem::deg(const Weight& w) const {
    if (!w.is_dominant()) throw DomainError("deg: weight " + w.str() + " is not dominant");
    const Rational d = deg_functional(w);
    if (!iwc::is_integral(d)) throw InternalError("deg: non-integral value " + to_string(d) + " at " + w.str());
    return d.get_num().get_si();
}

bool RootSystem::root_order_leq(const Weight& mu, const Weight& lambda) const {
    const Vec c = to_root_coords(lambda - mu);
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return iwc::is_integral(x) && x >= 0; });
}

std::vector<Weight> RootSystem::dominant_weights_up_to_deg(std::int64_t bound) const {
    std::vector<Weight> out;
    Weight cur(rank());
    auto rec = [&](auto&& self, int i, Rational budget) -> void {
        if (i == rank()) {
            out.push_back(cur);
            return;
        }
        for (long m = 0; deg_coeffs_[i] * m <= budget; ++m) {
            cur[i] = m;
            self(self, i + 1, budget - deg_coeffs_[i] * m);
        }
        cur[i] = 0;
    };
    rec(rec, 0, Rational(bound));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace iwc
