#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "direvc/guided_matching.hpp"
#include "direvc/trace.hpp"

namespace direvc {

// Why an endpoint was frozen or removed.
enum class ResolutionCause {
    Necessary,         // represents a vertex outside P
    TerminalTopDown,   // only represents its partner (top-down pass)
    RemainsVsRemoved,  // partner already removed (bottom-up pass)
    CountCompare,      // represented by more active endpoints than its partner
    Tie,               // equal counts, first endpoint of the row wins
    CascadeA,          // represents a removed endpoint
    CascadeB,          // represents nothing any more
    Direct,            // explicit freeze_and_remove call
};

std::string_view to_string(ResolutionCause cause);

// Raised when the bottom-up pass meets a row whose endpoints are both active
// but do not represent exactly each other, or another state the pass does
// not define. Carries the row so the harness can classify it.
class LocalMinimizationError : public std::logic_error {
public:
    LocalMinimizationError(std::size_t row, const std::string& what)
        : std::logic_error("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// Freezes `freeze` into the cover and/or removes `remove`, then cascades:
// active endpoints representing `remove` are frozen, and active endpoints
// left representing nothing are removed.
void freeze_and_remove(RepresentsTable& t, std::optional<VertexId> freeze,
                       std::optional<VertexId> remove, const TraceSink& sink = {},
                       ResolutionCause freezeCause = ResolutionCause::Direct,
                       ResolutionCause removeCause = ResolutionCause::Direct);

// Resolves every endpoint of a freshly built table to frozen or removed and
// returns the frozen endpoints in freeze order (also left in t.cover).
std::vector<VertexId> local_minimization(RepresentsTable& t, const TraceSink& sink = {});

}  // namespace direvc
