#include "setcolor/hall.hpp"

#include <stdexcept>

namespace setcolor {

namespace {

struct Matcher {
    std::vector<std::vector<int>> slot_colors;  // candidate colors per slot
    std::vector<int> color_slot;                // indexed by color, -1 when free
    std::vector<char> visited;

    bool augment(int slot) {
        for (int c : slot_colors[static_cast<std::size_t>(slot)]) {
            if (visited[static_cast<std::size_t>(c)]) continue;
            visited[static_cast<std::size_t>(c)] = 1;
            const int owner = color_slot[static_cast<std::size_t>(c)];
            if (owner < 0 || augment(owner)) {
                color_slot[static_cast<std::size_t>(c)] = slot;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<ColorSet>> clique_coloring(std::span<const ColorSet> lists, std::span<const int> demand) {
    if (lists.size() != demand.size()) throw std::invalid_argument("clique_coloring: lists and demand differ in size");
    Matcher m;
    std::vector<int> slot_owner;
    for (std::size_t i = 0; i < lists.size(); ++i)
        for (int k = 0; k < demand[i]; ++k) {
            m.slot_colors.push_back(lists[i].colors());
            slot_owner.push_back(static_cast<int>(i));
        }
    m.color_slot.assign(ColorSet::kMaxColor + 1, -1);
    for (std::size_t s = 0; s < m.slot_colors.size(); ++s) {
        m.visited.assign(ColorSet::kMaxColor + 1, 0);
        if (!m.augment(static_cast<int>(s))) return std::nullopt;
    }
    std::vector<ColorSet> out(lists.size());
    for (int c = 1; c <= ColorSet::kMaxColor; ++c) {
        const int s = m.color_slot[static_cast<std::size_t>(c)];
        if (s >= 0) out[static_cast<std::size_t>(slot_owner[static_cast<std::size_t>(s)])].insert(c);
    }
    return out;
}

TriangleResult triangle_colorable(const std::array<ColorSet, 3>& lists) {
    TriangleResult r;
    HallCertificate& cert = r.certificate;
    for (int i = 0; i < 3; ++i) cert.sizes[static_cast<std::size_t>(i)] = lists[static_cast<std::size_t>(i)].size();
    cert.pair_unions = {(lists[0] | lists[1]).size(), (lists[0] | lists[2]).size(), (lists[1] | lists[2]).size()};
    cert.triple_union = (lists[0] | lists[1] | lists[2]).size();

    static constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (int i = 0; i < 3 && cert.failure == HallFailure::None; ++i)
        if (cert.sizes[static_cast<std::size_t>(i)] < 3) {
            cert.failure = HallFailure::Single;
            cert.witness = {i};
        }
    for (std::size_t p = 0; p < 3 && cert.failure == HallFailure::None; ++p)
        if (cert.pair_unions[p] < 6) {
            cert.failure = HallFailure::Pair;
            cert.witness = {kPairs[p][0], kPairs[p][1]};
        }
    if (cert.failure == HallFailure::None && cert.triple_union < 9) {
        cert.failure = HallFailure::Triple;
        cert.witness = {0, 1, 2};
    }
    if (cert.failure != HallFailure::None) return r;

    const std::array<int, 3> demand{3, 3, 3};
    auto phi = clique_coloring(lists, demand);
    if (!phi) throw std::logic_error("Hall conditions hold but no saturating matching was found");
    r.coloring = std::array<ColorSet, 3>{(*phi)[0], (*phi)[1], (*phi)[2]};
    return r;
}

}  // namespace setcolor
