#include "gmorder/verdict.hpp"

namespace gmorder {

const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::HoldsReversed: return "HOLDS_REVERSED";
        case Status::Violated: return "VIOLATED";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

}  // namespace gmorder
