#ifndef MSG_ERRORS_HPP
#define MSG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msg {

// Error categories, grouped by how a caller should react:
//   kBudget-class errors mean "raise the limit and retry",
//   everything else is a hard failure of the input or of a claimed property.
enum class errc {
  syntax,
  unknown_generator,
  duplicate_generator,
  budget_exceeded,
  invalid_subgroup,
  not_regular,
  explosion_guard,
  evaluation,
  not_generating,
  not_subgroup_triple,
  disconnected,
  euler_mismatch,
  domain,
  no_pairs,
  cap_exceeded,
  degenerate_point_set,
  pole_hit,
  pole_on_graph,
  overflow,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

  // true for resource-limit errors (retriable with a bigger budget)
  bool is_budget() const {
    return code_ == errc::budget_exceeded || code_ == errc::explosion_guard ||
           code_ == errc::cap_exceeded;
  }

 private:
  errc code_;
};

#define MSG_DEFINE_ERROR(Name, Code)                                      \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(errc::Code, what) {}   \
  }

MSG_DEFINE_ERROR(SyntaxError, syntax);
MSG_DEFINE_ERROR(UnknownGenerator, unknown_generator);
MSG_DEFINE_ERROR(DuplicateGenerator, duplicate_generator);
MSG_DEFINE_ERROR(BudgetExceeded, budget_exceeded);
MSG_DEFINE_ERROR(InvalidSubgroup, invalid_subgroup);
MSG_DEFINE_ERROR(NotRegular, not_regular);
MSG_DEFINE_ERROR(ExplosionGuard, explosion_guard);
MSG_DEFINE_ERROR(EvaluationError, evaluation);
MSG_DEFINE_ERROR(NotGenerating, not_generating);
MSG_DEFINE_ERROR(NotSubgroupTriple, not_subgroup_triple);
MSG_DEFINE_ERROR(Disconnected, disconnected);
MSG_DEFINE_ERROR(EulerMismatch, euler_mismatch);
MSG_DEFINE_ERROR(DomainError, domain);
MSG_DEFINE_ERROR(NoPairs, no_pairs);
MSG_DEFINE_ERROR(CapExceeded, cap_exceeded);
MSG_DEFINE_ERROR(DegeneratePointSet, degenerate_point_set);
MSG_DEFINE_ERROR(PoleHit, pole_hit);
MSG_DEFINE_ERROR(PoleOnGraph, pole_on_graph);
MSG_DEFINE_ERROR(OverflowError, overflow);
MSG_DEFINE_ERROR(IoError, io);

#undef MSG_DEFINE_ERROR

}  // namespace msg

#endif
