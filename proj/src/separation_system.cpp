#include "widthdual/separation_system.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>

namespace wdk {

std::vector<int> members_of(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask mask_from(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 0 || e >= 32) throw UsageError("element out of mask range: " + std::to_string(e));
        m |= Mask{1} << e;
    }
    return m;
}

std::string to_string(Sep s) {
    std::ostringstream os;
    auto side = [&](Mask m) {
        os << '{';
        bool first = true;
        for (int v : members_of(m)) {
            if (!first) os << ',';
            os << v;
            first = false;
        }
        os << '}';
    };
    os << '(';
    side(s.a);
    os << ',';
    side(s.b);
    os << ')';
    return os.str();
}

int vertex_cap() {
    if (const char* env = std::getenv("WDK_CAP_VERTICES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v <= 31) return static_cast<int>(v);
    }
    return 12;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

namespace {
std::atomic<std::uint64_t> next_uid{1};
}

SeparationSystem::SeparationSystem(int ground, std::vector<Sep> payloads) : ground_(ground), uid_(next_uid++) {
    if (ground < 0 || ground > 32) throw UsageError("ground set size out of range");
    std::sort(payloads.begin(), payloads.end());
    payloads.erase(std::unique(payloads.begin(), payloads.end()), payloads.end());
    elems_ = std::move(payloads);
    index_.reserve(elems_.size() * 2);
    for (int i = 0; i < size(); ++i) index_.emplace(elems_[i], i);
    inv_.resize(elems_.size());
    for (int i = 0; i < size(); ++i) {
        auto it = index_.find(elems_[i].inverse());
        if (it == index_.end()) throw UsageError("system not closed under inverse: " + to_string(elems_[i]));
        inv_[i] = it->second;
        if (i <= inv_[i]) reps_.push_back(i);
    }
    if (size() <= kDenseLeqLimit) {
        words_ = (elems_.size() + 63) / 64;
        dense_.assign(words_ * elems_.size(), 0);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (sep_leq(elems_[i], elems_[j])) dense_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
}

int SeparationSystem::find(Sep s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

bool SeparationSystem::leq(int i, int j) const {
    if (!dense_.empty()) return (dense_[i * words_ + j / 64] >> (j % 64)) & 1U;
    return sep_leq(elems_[i], elems_[j]);
}

bool SeparationSystem::leq(SepRef r, SepRef s) const {
    if (r.system != uid_ || s.system != uid_) throw UsageError("comparison across separation systems");
    if (r.id < 0 || r.id >= size() || s.id < 0 || s.id >= size()) throw UsageError("element id out of range");
    return leq(r.id, s.id);
}

int SeparationSystem::nondegenerate_count() const {
    int c = 0;
    for (int r : reps_) c += degenerate(r) ? 0 : 1;
    return c;
}

void SeparationSystem::compute_trivial() const {
    std::call_once(trivial_once_, [this] {
        trivial_witness_.assign(elems_.size(), -1);
        for (int r = 0; r < size(); ++r) {
            for (int s : reps_) {
                if (s == underlying(r)) continue;
                if (lt(r, s) && lt(r, inv_[s])) {
                    trivial_witness_[r] = s;
                    break;
                }
            }
        }
    });
}

bool SeparationSystem::trivial(int i) const {
    compute_trivial();
    return trivial_witness_[i] >= 0;
}

Classification SeparationSystem::classify(int i) const {
    if (i < 0 || i >= size()) throw UsageError("element id out of range");
    compute_trivial();
    Classification c;
    c.degenerate = degenerate(i);
    c.small = leq(i, inv_[i]);
    c.trivial = trivial_witness_[i] >= 0;
    c.witness = trivial_witness_[i];
    c.co_trivial = trivial_witness_[inv_[i]] >= 0;
    return c;
}

bool nested(const SeparationSystem& s, int r, int t) {
    int ri = s.inverse(r), ti = s.inverse(t);
    return s.leq(r, t) || s.leq(r, ti) || s.leq(ri, t) || s.leq(ri, ti);
}

bool points_toward(const SeparationSystem& s, int r, int t) { return s.leq(r, t) || s.leq(r, s.inverse(t)); }

bool is_star(const SeparationSystem& s, const std::vector<int>& members) {
    if (members.empty()) throw UsageError("a star must be non-empty");
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (members[i] != members[j] && !s.leq(members[i], s.inverse(members[j]))) return false;
    return true;
}

std::optional<std::pair<int, int>> consistency_violation(const SeparationSystem& s, const std::vector<int>& set) {
    for (int x : set) {
        int r = s.inverse(x);
        for (int t : set)
            if (s.underlying(r) != s.underlying(t) && s.lt(r, t)) return std::pair{r, t};
    }
    return std::nullopt;
}

bool is_consistent(const SeparationSystem& s, const std::vector<int>& set) { return !consistency_violation(s, set); }

bool is_antisymmetric(const SeparationSystem& s, const std::vector<int>& set) {
    std::vector<char> in(s.size(), 0);
    for (int x : set) in[x] = 1;
    for (int x : set)
        if (in[s.inverse(x)]) return false;
    return true;
}

bool is_orientation(const SeparationSystem& s, const std::vector<int>& set) {
    std::vector<int> count(s.size(), 0);
    for (int x : set) {
        if (x < 0 || x >= s.size()) return false;
        ++count[s.underlying(x)];
    }
    std::vector<char> in(s.size(), 0);
    for (int x : set) {
        if (in[x]) return false;
        in[x] = 1;
    }
    for (int r : s.separations())
        if (count[r] != 1) return false;
    return true;
}

}  // namespace wdk
