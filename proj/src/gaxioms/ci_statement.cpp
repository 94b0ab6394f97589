#include "gaxioms/ci_statement.hpp"

#include <algorithm>
#include <tuple>

#include "relcore/errors.hpp"

namespace gaxioms {

using relcore::argument_error;

CIStatement::CIStatement(AttributeSet x, AttributeSet z, AttributeSet y, std::string context)
    : lhs_a_(std::move(x)), cond_(std::move(z)), lhs_b_(std::move(y)), context_(std::move(context)) {
  if (lhs_a_.empty() || lhs_b_.empty())
    throw argument_error("independence sides must be non-empty");
  if (!lhs_a_.disjoint_with(lhs_b_) || !lhs_a_.disjoint_with(cond_) ||
      !lhs_b_.disjoint_with(cond_))
    throw argument_error("CI statement sets must be mutually disjoint: " + lhs_a_.to_string() +
                         " / " + cond_.to_string() + " / " + lhs_b_.to_string());
  if (lhs_b_ < lhs_a_) std::swap(lhs_a_, lhs_b_);
}

AttributeSet CIStatement::all_attributes() const {
  return lhs_a_.set_union(cond_).set_union(lhs_b_);
}

std::string CIStatement::to_string() const {
  std::string out = lhs_a_.to_string() + " _|_ " + lhs_b_.to_string();
  if (cond_.empty())
    out += " |-";
  else
    out += " | " + cond_.to_string();
  out += " @ " + context_;
  return out;
}

bool CIStatement::operator==(const CIStatement& o) const {
  return context_ == o.context_ && lhs_a_ == o.lhs_a_ && cond_ == o.cond_ && lhs_b_ == o.lhs_b_;
}

bool CIStatement::operator<(const CIStatement& o) const {
  return std::tie(context_, lhs_a_, cond_, lhs_b_) <
         std::tie(o.context_, o.lhs_a_, o.cond_, o.lhs_b_);
}

bool CISet::insert(const CIStatement& s) {
  if (!universe_.empty() && !s.all_attributes().subset_of(universe_))
    throw argument_error("statement " + s.to_string() + " leaves the universe " +
                         universe_.to_string());
  auto it = std::lower_bound(statements_.begin(), statements_.end(), s);
  if (it != statements_.end() && *it == s) return false;
  statements_.insert(it, s);
  return true;
}

bool CISet::contains(const CIStatement& s) const {
  return std::binary_search(statements_.begin(), statements_.end(), s);
}

}  // namespace gaxioms
