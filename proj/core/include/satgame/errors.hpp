#pragma once

#include <stdexcept>
#include <string>

namespace satgame {

// Instance is outside the hard solver/enumeration budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A move was rejected. The reason distinguishes a structural duplicate from a
// forbidden-structure violation so that strategy bugs are diagnosable.
class illegal_move_error : public std::runtime_error {
public:
    enum class reason { duplicate, forbidden, out_of_range };

    illegal_move_error(reason r, const std::string& what)
        : std::runtime_error(what), reason_(r) {}

    reason why() const { return reason_; }

private:
    reason reason_;
};

// A strategy was invoked out of phase, produced no move, or broke one of its
// own bookkeeping invariants.
class strategy_error : public std::runtime_error {
public:
    explicit strategy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace satgame
