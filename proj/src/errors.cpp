#include "latcert/errors.hpp"

namespace latcert {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_valuation: return "ZeroValuation";
        case errc::degree_too_low: return "DegreeTooLow";
        case errc::bad_reduction: return "BadReduction";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::singular_root: return "SingularRoot";
        case errc::not_monic: return "NotMonic";
        case errc::not_sl2: return "NotSL2";
        case errc::does_not_split: return "DoesNotSplit";
        case errc::ramified: return "Ramified";
        case errc::entries_outside_ring: return "EntriesOutsideRing";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::interval_too_wide: return "IntervalTooWide";
        case errc::rank_unresolved: return "RankUnresolved";
        case errc::memory_budget_exceeded: return "MemoryBudgetExceeded";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace latcert
