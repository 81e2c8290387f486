#include "tnngrass/quad_expression.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tnn {

GrassmannContext::GrassmannContext(int m_, int n_) : m(m_), n(n_) {
  const bool scalar = (m == 0 && n == 0);
  if (!scalar && (m < 1 || m > n))
    throw std::invalid_argument("GrassmannContext: need 1 <= m <= n");
}

namespace {

// multiplicity profile of one term: index -> #{X in {I, J} : index in X}
std::map<int, int> multiplicities(const QuadTerm& t) {
  std::map<int, int> mult;
  for (int x : t.I.elements()) mult[x] += 1;
  for (int x : t.J.elements()) mult[x] += 1;
  return mult;
}

}  // namespace

QuadExpression::QuadExpression(GrassmannContext ctx, std::vector<QuadTerm> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  for (std::size_t a = 0; a < terms_.size(); ++a) {
    const QuadTerm& t = terms_[a];
    if (t.I.size() != ctx_.m || t.J.size() != ctx_.m)
      throw std::invalid_argument("QuadExpression: term " + std::to_string(a) +
                                  ": |I| and |J| must equal m = " + std::to_string(ctx_.m));
    for (const IndexSet* s : {&t.I, &t.J})
      if (!s->empty() && s->max_element() > ctx_.ambient())
        throw std::invalid_argument("QuadExpression: term " + std::to_string(a) +
                                    ": index outside [" + std::to_string(ctx_.ambient()) + "]");
  }

  if (!terms_.empty()) {
    const auto ref = multiplicities(terms_[0]);
    for (std::size_t a = 1; a < terms_.size(); ++a)
      if (multiplicities(terms_[a]) != ref)
        throw std::invalid_argument("QuadExpression: term " + std::to_string(a) +
                                    " breaks homogeneity (multiset union differs from term 0)");
    std::vector<int> common, diff;
    for (const auto& [x, k] : ref) (k == 2 ? common : diff).push_back(x);
    common_ = IndexSet(std::move(common));
    sym_diff_ = IndexSet(std::move(diff));
  }
}

std::string QuadExpression::to_string() const {
  std::string out = "Gr(" + std::to_string(ctx_.m) + "," + std::to_string(ctx_.ambient()) + "):";
  for (const QuadTerm& t : terms_)
    out += " (" + rat::to_string(t.coeff) + ")*D" + t.I.to_string() + "*D" + t.J.to_string();
  if (terms_.empty()) out += " 0";
  return out;
}

QuadExpression merge_duplicate_terms(const QuadExpression& e) {
  std::vector<QuadTerm> merged;
  std::map<std::pair<IndexSet, IndexSet>, std::size_t> seen;
  for (const QuadTerm& t : e.terms()) {
    auto key = std::make_pair(t.I, t.J);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), merged.size());
      merged.push_back(t);
    } else {
      merged[it->second].coeff += t.coeff;
    }
  }
  return QuadExpression(e.context(), std::move(merged));
}

QuadExpression scale_expression(const QuadExpression& e, const Rational& k) {
  std::vector<QuadTerm> terms = e.terms();
  for (QuadTerm& t : terms) t.coeff *= k;
  return QuadExpression(e.context(), std::move(terms));
}

}  // namespace tnn
