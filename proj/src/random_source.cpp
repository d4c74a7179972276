#include "affclass/random_source.hpp"

#include <algorithm>

namespace affclass {

long RandomSource::int_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
}

Rat RandomSource::rat() {
    const long num = int_in(-10, 10);
    const long den = int_in(1, 10);
    return ratio(num, den);
}

Rat RandomSource::nonzero_rat() {
    for (;;) {
        Rat r = rat();
        if (r != 0) {
            return r;
        }
    }
}

Rat RandomSource::positive_rat() {
    const long num = int_in(1, 10);
    const long den = int_in(1, 10);
    return ratio(num, den);
}

Rat RandomSource::rat_excluding(const std::vector<Rat>& avoid) {
    for (;;) {
        Rat r = rat();
        if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) {
            return r;
        }
    }
}

} // namespace affclass
