// Transition vocabulary shared by the 2-Planar and arc-hybrid+Swap systems.
#pragma once

#include <string>
#include <string_view>

namespace twoplanar {

enum class Kind : unsigned char { Shift, Reduce, LeftArc, RightArc, Switch, Swap };

inline constexpr int kNumKinds = 6;

// label is meaningful only for LeftArc/RightArc; -1 means "unlabeled".
struct Transition {
  Kind kind = Kind::Shift;
  int label = -1;

  bool is_arc() const { return kind == Kind::LeftArc || kind == Kind::RightArc; }
  bool operator==(const Transition&) const = default;
};

inline Transition shift() { return {Kind::Shift, -1}; }
inline Transition reduce() { return {Kind::Reduce, -1}; }
inline Transition left_arc(int label = -1) { return {Kind::LeftArc, label}; }
inline Transition right_arc(int label = -1) { return {Kind::RightArc, label}; }
inline Transition switch_planes() { return {Kind::Switch, -1}; }
inline Transition swap() { return {Kind::Swap, -1}; }

// Which transition system a parser or model uses.
enum class System : unsigned char { TwoPlanar, HybridSwap };

std::string_view system_name(System s);  // "2planar" / "hybrid-swap"
// Throws std::invalid_argument on an unknown name.
System parse_system(std::string_view name);

std::string_view kind_name(Kind k);
std::string to_string(const Transition& t);

}  // namespace twoplanar
