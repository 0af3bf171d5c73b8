#include "widthdual/family.hpp"

#include <algorithm>
#include <functional>

namespace wdk {

bool StarFamily::valid_star(const Star& sigma) const {
    if (sigma.empty()) return false;
    for (int x : sigma)
        if (x < 0 || x >= sys_->size()) return false;
    return is_star(*sys_, sigma);
}

namespace {

bool compatible(const SeparationSystem& s, const Star& chosen, int c) {
    for (int x : chosen)
        if (x != c && !(s.leq(c, s.inverse(x)) && s.leq(x, s.inverse(c)))) return false;
    return true;
}

std::vector<int> candidates(const std::vector<char>& in, int must) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(in.size()); ++i)
        if (in[i] && i != must) out.push_back(i);
    return out;
}

Star sorted_star(Star s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

IntersectionFamily::IntersectionFamily(const SeparationSystem& s, int bound, int max_size)
    : StarFamily(s), bound_(bound), max_size_(max_size) {
    if (bound < 1) throw UsageError("intersection bound must be positive");
}

std::string IntersectionFamily::name() const {
    return max_size_ ? "intersection<" + std::to_string(bound_) + ",size<=" + std::to_string(max_size_) + ">"
                     : "intersection<" + std::to_string(bound_) + ">";
}

bool IntersectionFamily::contains(const Star& sigma) const {
    if (max_size_ && static_cast<int>(sigma.size()) > max_size_) return false;
    if (!valid_star(sigma)) return false;
    Mask inter = sys_->full();
    for (int x : sigma) inter &= sys_->payload(x).b;
    return popcount(inter) < bound_;
}

std::optional<Star> IntersectionFamily::find_within(const std::vector<char>& in, int must) const {
    const auto& s = *sys_;
    auto cand = candidates(in, must);
    Star chosen;
    // Each added element must shrink the running intersection, so every member has a witness path.
    std::function<bool(std::size_t, Mask)> dfs = [&](std::size_t start, Mask inter) {
        if (popcount(inter) < bound_) return true;
        if (max_size_ && static_cast<int>(chosen.size()) >= max_size_) return false;
        for (std::size_t i = start; i < cand.size(); ++i) {
            int c = cand[i];
            Mask next = inter & s.payload(c).b;
            if (next == inter || !compatible(s, chosen, c)) continue;
            chosen.push_back(c);
            if (dfs(i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (must >= 0) {
        chosen.push_back(must);
        if (dfs(0, s.payload(must).b)) return sorted_star(chosen);
        return std::nullopt;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
        chosen.assign(1, cand[i]);
        if (dfs(i + 1, s.payload(cand[i]).b)) return sorted_star(chosen);
    }
    return std::nullopt;
}

TangleFamily::TangleFamily(const SeparationSystem& s, const Graph& g) : StarFamily(s), graph_mode_(true), graph_(g) {
    if (g.m() > kMaxCoverEdges) throw ResourceError("too many edges for tangle cover");
    if (s.ground() != g.n) throw UsageError("graph does not match separation system");
    goal_.verts = full_mask(g.n);
    for (int e = 0; e < g.m(); ++e) goal_.edges.set(e);
    covers_.reserve(s.size());
    for (int i = 0; i < s.size(); ++i) covers_.push_back(cover_of(i));
}

TangleFamily::TangleFamily(const SeparationSystem& s) : StarFamily(s), graph_mode_(false) {
    goal_.verts = s.full();
    covers_.reserve(s.size());
    for (int i = 0; i < s.size(); ++i) covers_.push_back(cover_of(i));
}

TangleFamily::Cover TangleFamily::cover_of(int id) const {
    Cover c;
    Mask a = sys_->payload(id).a;
    c.verts = a;
    if (graph_mode_)
        for (int e = 0; e < graph_.m(); ++e)
            if (is_subset(graph_.edge_mask(e), a)) c.edges.set(e);
    return c;
}

bool TangleFamily::complete(const Cover& c) const { return c.verts == goal_.verts && c.edges == goal_.edges; }

bool TangleFamily::covers(const std::vector<int>& ids) const {
    if (ids.empty() || ids.size() > 3) return false;
    Cover u;
    for (int x : ids) {
        u.verts |= covers_.at(x).verts;
        u.edges |= covers_.at(x).edges;
    }
    return complete(u);
}

bool TangleFamily::contains(const Star& sigma) const {
    if (sigma.size() > 3 || !valid_star(sigma)) return false;
    return covers(sigma);
}

std::optional<Star> TangleFamily::find_within(const std::vector<char>& in, int must) const {
    const auto& s = *sys_;
    auto cand = candidates(in, must);
    Star chosen;
    std::function<bool(std::size_t, const Cover&)> dfs = [&](std::size_t start, const Cover& cur) {
        if (complete(cur)) return true;
        if (chosen.size() >= 3) return false;
        for (std::size_t i = start; i < cand.size(); ++i) {
            int c = cand[i];
            Cover next{cur.verts | covers_[c].verts, cur.edges | covers_[c].edges};
            if ((next.verts == cur.verts && next.edges == cur.edges) || !compatible(s, chosen, c)) continue;
            chosen.push_back(c);
            if (dfs(i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (must >= 0) {
        chosen.push_back(must);
        if (dfs(0, covers_[must])) return sorted_star(chosen);
        return std::nullopt;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
        chosen.assign(1, cand[i]);
        if (dfs(i + 1, covers_[cand[i]])) return sorted_star(chosen);
    }
    return std::nullopt;
}

MatroidFamily::MatroidFamily(const SeparationSystem& s, const Matroid& m, int k) : StarFamily(s), m_(&m), k_(k) {
    if (s.ground() != m.size()) throw UsageError("matroid does not match separation system");
}

int MatroidFamily::star_order(const Star& sigma) const {
    int total = 0;
    for (int x : sigma) total += m_->rank(sys_->payload(x).b);
    return total - (static_cast<int>(sigma.size()) - 1) * m_->rank();
}

void MatroidFamily::check_member(const Star& sigma) const {
    int order = star_order(sigma);
    for (int x : sigma)
        if (matroid_lambda(*m_, sys_->payload(x).a) > order)
            throw EngineError("matroid star member exceeds star order: " + to_string(sys_->payload(x)));
}

bool MatroidFamily::contains(const Star& sigma) const {
    if (!valid_star(sigma) || star_order(sigma) >= k_) return false;
    check_member(sigma);
    return true;
}

std::optional<Star> MatroidFamily::find_within(const std::vector<char>& in, int must) const {
    const auto& s = *sys_;
    const int rm = m_->rank();
    std::vector<int> cand;
    for (int c : candidates(in, must))
        if (m_->rank(s.payload(c).b) < rm) cand.push_back(c);
    Star chosen;
    std::function<bool(std::size_t, int)> dfs = [&](std::size_t start, int value) {
        if (value < k_) return true;
        for (std::size_t i = start; i < cand.size(); ++i) {
            int c = cand[i];
            if (!compatible(s, chosen, c)) continue;
            chosen.push_back(c);
            if (dfs(i + 1, value + m_->rank(s.payload(c).b) - rm)) return true;
            chosen.pop_back();
        }
        return false;
    };
    auto finish = [&]() -> std::optional<Star> {
        Star out = sorted_star(chosen);
        check_member(out);
        return out;
    };
    if (must >= 0) {
        chosen.push_back(must);
        if (dfs(0, m_->rank(s.payload(must).b))) return finish();
        return std::nullopt;
    }
    for (int c : candidates(in, -1)) {
        int rb = m_->rank(s.payload(c).b);
        if (rb < k_) {
            chosen.assign(1, c);
            return finish();
        }
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
        chosen.assign(1, cand[i]);
        if (dfs(i + 1, m_->rank(s.payload(cand[i]).b))) return finish();
    }
    return std::nullopt;
}

ExplicitFamily::ExplicitFamily(const SeparationSystem& s, std::vector<Star> members) : StarFamily(s) {
    for (auto& m : members) {
        m = sorted_unique(std::move(m));
        if (!valid_star(m)) throw UsageError("family member is not a star of the system");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
}

bool ExplicitFamily::contains(const Star& sigma) const { return std::binary_search(members_.begin(), members_.end(), sigma); }

std::optional<Star> ExplicitFamily::find_within(const std::vector<char>& in, int must) const {
    for (const auto& m : members_) {
        if (must >= 0 && !std::binary_search(m.begin(), m.end(), must)) continue;
        if (std::all_of(m.begin(), m.end(), [&](int x) { return in[x] != 0; })) return m;
    }
    return std::nullopt;
}

ExtendedFamily::ExtendedFamily(const StarFamily& base, std::vector<char> extra)
    : StarFamily(base.system()), base_(&base), extra_(std::move(extra)) {
    extra_.resize(base.system().size(), 0);
}

bool ExtendedFamily::contains(const Star& sigma) const {
    if (sigma.size() == 1 && sigma[0] >= 0 && sigma[0] < sys_->size() && extra_[sys_->inverse(sigma[0])]) return true;
    return base_->contains(sigma);
}

std::optional<Star> ExtendedFamily::find_within(const std::vector<char>& in, int must) const {
    if (must >= 0) {
        if (extra_[sys_->inverse(must)]) return Star{must};
        return base_->find_within(in, must);
    }
    for (int i = 0; i < sys_->size(); ++i)
        if (in[i] && extra_[sys_->inverse(i)]) return Star{i};
    return base_->find_within(in, -1);
}

}  // namespace wdk
