#pragma once

#include <cmath>

namespace qrabi {

// Initial two-atom Bell states, photons in vacuum:
//   bell1 = cos(a)|up,down> + sin(a)|down,up>   (anti-correlated spins)
//   bell2 = cos(a)|up,up>   + sin(a)|down,down> (correlated spins)
enum class BellKind { bell1 = 1, bell2 = 2 };

struct BellSpec {
    BellKind kind = BellKind::bell1;
    double alpha = 0.7853981633974483;  // pi/4

    double weight(int branch) const {
        return branch == 0 ? std::cos(alpha) : std::sin(alpha);
    }

    bool operator==(const BellSpec&) const = default;
};

enum class AtomLevel { up, down };

// Which atomic level subsystem (1 or 2) starts from in a given Bell branch.
inline AtomLevel bell_branch_level(const BellSpec& bell, int subsystem, int branch) {
    if (bell.kind == BellKind::bell2) return branch == 0 ? AtomLevel::up : AtomLevel::down;
    // bell1: branch 0 = |up,down>, branch 1 = |down,up>
    if (subsystem == 1) return branch == 0 ? AtomLevel::up : AtomLevel::down;
    return branch == 0 ? AtomLevel::down : AtomLevel::up;
}

} // namespace qrabi
