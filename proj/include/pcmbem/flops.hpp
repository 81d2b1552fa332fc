#pragma once

#include <cstdint>

namespace pcm {

// Arithmetic-operation tally. Every primitive (+,-,*,/,sqrt,log,atan2,acos)
// counts as one flop in the total.
struct FlopLedger {
    std::uint64_t adds = 0;   // additions and subtractions
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::uint64_t sqrts = 0;
    std::uint64_t transcendentals = 0;   // log, atan2, acos

    void tally(std::uint64_t a, std::uint64_t m, std::uint64_t d = 0,
               std::uint64_t s = 0, std::uint64_t t = 0) {
        adds += a;
        muls += m;
        divs += d;
        sqrts += s;
        transcendentals += t;
    }

    std::uint64_t total() const { return adds + muls + divs + sqrts + transcendentals; }

    FlopLedger& operator+=(const FlopLedger& o) {
        adds += o.adds;
        muls += o.muls;
        divs += o.divs;
        sqrts += o.sqrts;
        transcendentals += o.transcendentals;
        return *this;
    }

    friend FlopLedger operator+(FlopLedger a, const FlopLedger& b) { return a += b; }

    bool operator==(const FlopLedger&) const = default;
};

} // namespace pcm
