#include "twoplanar/features.hpp"

namespace twoplanar {

int feature_arity(System s) { return s == System::TwoPlanar ? 17 : 11; }

Modifiers::Modifiers(int n)
    : left_(static_cast<size_t>(n) + 1, kNullSlot), right_(static_cast<size_t>(n) + 1, kNullSlot) {}

Modifiers Modifiers::from_arcs(const ArcSet& arcs) {
  Modifiers m(arcs.nodes() - 1);
  for (const Arc& a : arcs.arcs()) m.add(a);
  return m;
}

void Modifiers::add(const Arc& a) {
  int& l = left_[static_cast<size_t>(a.head)];
  int& r = right_[static_cast<size_t>(a.head)];
  if (l == kNullSlot || a.dep < l) l = a.dep;
  if (r == kNullSlot || a.dep > r) r = a.dep;
}

namespace {

int from_top(const std::vector<int>& st, size_t k) {
  return k < st.size() ? st[st.size() - 1 - k] : kNullSlot;
}

void add_modifiers(FeatureView& fv, size_t stack_words, int front, const Modifiers& mods) {
  for (size_t i = 0; i < stack_words; ++i) {
    fv.slots.push_back(mods.leftmost(fv.slots[i]));
    fv.slots.push_back(mods.rightmost(fv.slots[i]));
  }
  fv.slots.push_back(mods.leftmost(front));
}

}  // namespace

FeatureView extract_features(const Configuration& c, const Modifiers& mods) {
  FeatureView fv;
  fv.slots.reserve(17);
  for (size_t k = 0; k < 3; ++k) fv.slots.push_back(from_top(c.active_stack(), k));
  for (size_t k = 0; k < 2; ++k) fv.slots.push_back(from_top(c.inactive_stack(), k));
  const int front = c.buffer_empty() ? kNullSlot : c.buffer_front();
  fv.slots.push_back(front);
  add_modifiers(fv, 5, front, mods);
  return fv;
}

FeatureView extract_features(const HybridConfiguration& c, const Modifiers& mods) {
  FeatureView fv;
  fv.slots.reserve(11);
  for (size_t k = 0; k < 3; ++k) fv.slots.push_back(from_top(c.stack(), k));
  const int front = c.buffer_empty() ? kNullSlot : c.buffer_front();
  fv.slots.push_back(front);
  add_modifiers(fv, 3, front, mods);
  return fv;
}

}  // namespace twoplanar
