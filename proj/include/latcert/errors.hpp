#pragma once

#include <stdexcept>
#include <string>

namespace latcert {

// Failure categories. The CLI maps these onto stable exit codes, so the
// assignment of a condition to a category is part of the interface.
enum class errc {
    zero_valuation,
    degree_too_low,
    bad_reduction,
    not_squarefree,
    not_irreducible,
    singular_root,
    not_monic,
    not_sl2,
    does_not_split,
    ramified,
    entries_outside_ring,
    insufficient_precision,
    interval_too_wide,
    rank_unresolved,
    memory_budget_exceeded,
    parse_error,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

    errc kind() const { return kind_; }

    // true for violated preconditions and precision contracts (CLI exit 3)
    bool is_precondition() const {
        return kind_ != errc::memory_budget_exceeded && kind_ != errc::parse_error;
    }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace latcert
