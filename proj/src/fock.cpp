#include "fockcat/fock.hpp"

namespace fockcat {

namespace {

void add_sparse(std::map<int, Integer>& m, int k, const Integer& v) {
  if (v == 0) return;
  auto& slot = m[k];
  slot += v;
  if (slot == 0) m.erase(k);
}

void check_arity(const Multipartition& m, const SignedTypeFactor& f) {
  if (static_cast<int>(m.size()) != f.arity()) fail(ErrorKind::ArityMismatch, "multipartition arity does not match type");
}

// Row of the box with the given content that can be added (remove=false) or removed.
std::optional<int> box_row(const Partition& p, int content, bool remove) {
  for (const auto& b : remove ? p.removable() : p.addable())
    if (b.content == content) return b.row;
  return std::nullopt;
}

FockVector act(int i, const Multipartition& lambda, const SignedTypeFactor& f, bool lowering) {
  check_arity(lambda, f);
  FockVector out;
  for (int j = 0; j < f.arity(); ++j) {
    const bool dual = f.c[j] == 1;
    const int content = dual ? -(i - f.sigma[j]) : i - f.sigma[j];
    // f adds on F and removes on the dual; e does the opposite.
    const bool remove = lowering == dual;
    if (auto r = box_row(lambda[j], content, remove)) {
      Multipartition m = lambda;
      m[j] = remove ? m[j].remove_box(*r) : m[j].add_box(*r);
      out.add(m, 1);
    }
  }
  return out;
}

FockVector act(int i, const FockVector& v, const SignedTypeFactor& f, bool lowering) {
  FockVector out;
  for (const auto& [m, c] : v.terms()) {
    FockVector part = act(i, m, f, lowering);
    part *= c;
    out += part;
  }
  return out;
}

}  // namespace

void FockWeight::add_fundamental(int s, const Integer& k) { add_sparse(fundamental, s, k); }
void FockWeight::add_root(int b, const Integer& k) { add_sparse(roots, b, k); }

Integer FockWeight::pairing(int i) const {
  Integer v = 0;
  if (auto it = fundamental.find(i); it != fundamental.end()) v += it->second;
  for (const auto& [b, k] : roots) {
    if (b == i)
      v += 2 * k;
    else if (b == i - 1 || b == i + 1)
      v -= k;
  }
  return v;
}

std::string FockWeight::str() const {
  std::string s;
  auto term = [&](const Integer& k, const std::string& sym) {
    if (!s.empty()) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    Integer a = abs(k);
    if (a != 1) s += a.get_str() + "*";
    s += sym;
  };
  for (const auto& [i, k] : fundamental) term(k, "w" + std::to_string(i));
  for (const auto& [b, k] : roots) term(k, "a" + std::to_string(b));
  return s.empty() ? "0" : s;
}

FockWeight operator-(const FockWeight& a, const FockWeight& b) {
  FockWeight r = a;
  for (const auto& [k, v] : b.fundamental) r.add_fundamental(k, -v);
  for (const auto& [k, v] : b.roots) r.add_root(k, -v);
  return r;
}

FockWeight partial_weight(const Multipartition& lambda, const SignedTypeFactor& f, int prefix) {
  check_arity(lambda, f);
  FockWeight w;
  for (int j = 0; j < prefix; ++j) {
    const int sign = f.c[j] == 0 ? 1 : -1;
    w.add_fundamental(f.sigma[j], sign);
    for (const auto& box : lambda[j].boxes()) w.add_root(f.sigma[j] + sign * box.content, -sign);
  }
  return w;
}

FockWeight weight_of(const Multipartition& lambda, const SignedTypeFactor& f) {
  return partial_weight(lambda, f, f.arity());
}

FockVector f_action(int i, const Multipartition& lambda, const SignedTypeFactor& f) { return act(i, lambda, f, true); }
FockVector e_action(int i, const Multipartition& lambda, const SignedTypeFactor& f) { return act(i, lambda, f, false); }
FockVector f_action(int i, const FockVector& v, const SignedTypeFactor& f) { return act(i, v, f, true); }
FockVector e_action(int i, const FockVector& v, const SignedTypeFactor& f) { return act(i, v, f, false); }

bool s_order_leq(const Multipartition& mu, const Multipartition& lambda, const SignedTypeFactor& f) {
  check_arity(mu, f);
  check_arity(lambda, f);
  for (int n = 1; n <= f.arity(); ++n) {
    FockWeight d = partial_weight(mu, f, n) - partial_weight(lambda, f, n);
    if (!d.fundamental.empty()) return false;
    for (const auto& [b, k] : d.roots)
      if (k < 0 || (n == f.arity() && k != 0)) return false;
  }
  return true;
}

std::vector<Multipartition> truncated_basis(const SignedTypeFactor& f, int bound) {
  if (bound < 0) fail(ErrorKind::InvalidArgument, "truncation bound must be nonnegative");
  return multipartitions_up_to(f.arity(), bound);
}

}  // namespace fockcat
