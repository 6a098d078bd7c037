#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pqcoloring/patterns.hpp"

namespace pqc {

namespace detail {

inline ForbiddenPattern class_pattern(
    std::string name, int k,
    std::initializer_list<std::initializer_list<PatternEdge>> classes,
    ColorScope scope) {
  ForbiddenPattern p;
  p.name = std::move(name);
  p.kind = PatternKind::ClassPattern;
  p.k = k;
  p.scope = scope;
  for (const auto& cls : classes) p.classes.emplace_back(cls);
  validate_pattern(p);
  return p;
}

}  // namespace detail

/// The shipped configuration set. Vertices are labeled a=0, b=1, c=2, d=3,
/// e=4; a class lists the edges required to share one color. Classes are not
/// required to receive distinct colors, which only enlarges the forbidden
/// set and is still avoided by the respective coloring.
///
/// fig1*  one-color paths closed by another color (color-cycle instances)
/// fig2*  a mono path on a,b,c,d with chord ac recolored plus two edges of a
///        third class touching e
/// fig3*  alternating 4-cycles ab/cd vs bc/ad with a same-colored cherry at e
/// fig4*  further block-coloring configurations
/// fig5*  configurations ruled out by the field coloring (5c, 5d need the
///        full product coloring)
inline const std::vector<ForbiddenPattern>& default_patterns() {
  using detail::class_pattern;
  using E = PatternEdge;
  static const std::vector<ForbiddenPattern> patterns = [] {
    std::vector<ForbiddenPattern> v;

    ForbiddenPattern mono;
    mono.name = "mono-odd-cycle";
    mono.kind = PatternKind::MonoOddCycle;
    mono.scope = ColorScope::Cfls;
    v.push_back(mono);

    ForbiddenPattern cycle;
    cycle.name = "color-cycle";
    cycle.kind = PatternKind::ColorCycle;
    cycle.scope = ColorScope::Cfls;
    v.push_back(cycle);

    const ColorScope B = ColorScope::Cfls;      // block-string coloring
    const ColorScope F = ColorScope::Algebraic;  // field coloring
    const ColorScope P = ColorScope::Product;

    v.push_back(class_pattern("fig1a", 4,
        {{E{0, 1}, E{0, 2}}, {E{1, 2}, E{1, 3}}, {E{0, 3}, E{2, 3}}}, B));
    v.push_back(class_pattern("fig1b", 5,
        {{E{0, 1}, E{1, 2}, E{2, 3}}, {E{0, 2}, E{2, 4}, E{3, 4}}}, B));
    v.push_back(class_pattern("fig1c", 5,
        {{E{0, 1}, E{0, 3}}, {E{0, 2}, E{2, 4}}, {E{1, 2}, E{1, 3}},
         {E{2, 3}, E{3, 4}}, {E{0, 4}, E{1, 4}}}, B));
    v.push_back(class_pattern("fig1d", 5,
        {{E{0, 1}, E{0, 4}}, {E{0, 2}, E{2, 4}}, {E{1, 3}, E{1, 4}},
         {E{2, 3}, E{3, 4}}}, B));

    // The 16 mono-P3 configurations. Class 1 is the path a-b-c-d, class 2
    // the recolored chord ac plus edges into e, class 3 the third color.
    const std::initializer_list<PatternEdge> p3 = {E{0, 1}, E{1, 2}, E{2, 3}};
    struct Fig2 {
      const char* name;
      std::initializer_list<PatternEdge> red;
      std::initializer_list<PatternEdge> green;
    };
    const Fig2 fig2[] = {
        {"fig2-01", {E{0, 2}, E{0, 4}}, {E{1, 3}, E{3, 4}}},
        {"fig2-02", {E{0, 2}, E{0, 4}}, {E{0, 3}, E{2, 4}}},
        {"fig2-03", {E{0, 2}, E{0, 4}}, {E{1, 4}, E{2, 4}}},
        {"fig2-04", {E{0, 2}, E{0, 4}}, {E{2, 4}, E{3, 4}}},
        {"fig2-05", {E{0, 2}, E{1, 4}}, {E{2, 4}, E{3, 4}}},
        {"fig2-06", {E{0, 2}, E{1, 4}}, {E{0, 4}, E{3, 4}}},
        {"fig2-07", {E{0, 2}, E{1, 4}}, {E{0, 3}, E{3, 4}}},
        {"fig2-08", {E{0, 2}, E{1, 4}}, {E{1, 3}, E{2, 4}}},
        {"fig2-09", {E{0, 2}, E{1, 4}}, {E{0, 4}, E{1, 3}}},
        {"fig2-10", {E{0, 2}, E{2, 4}}, {E{0, 4}, E{1, 4}}},
        {"fig2-11", {E{0, 2}, E{2, 4}}, {E{0, 3}, E{0, 4}}},
        {"fig2-12", {E{0, 2}, E{2, 4}}, {E{0, 4}, E{3, 4}}},
        {"fig2-13", {E{0, 2}, E{2, 4}}, {E{1, 3}, E{1, 4}}},
        {"fig2-14", {E{0, 2}, E{2, 4}}, {E{1, 3}, E{3, 4}}},
        {"fig2-15", {E{0, 2}, E{3, 4}}, {E{0, 4}, E{1, 3}}},
        {"fig2-16", {E{0, 2}, E{3, 4}}, {E{0, 3}, E{1, 4}}},
    };
    for (const Fig2& f : fig2)
      v.push_back(class_pattern(f.name, 5, {p3, f.red, f.green}, B));

    // Alternating C4 (ab=cd, bc=ad) with the cherry ae=de; the fourth
    // ingredient merges the cherry or an e-edge into a spanned color.
    v.push_back(class_pattern("fig3a", 5,
        {{E{0, 1}, E{2, 3}, E{0, 4}, E{3, 4}}, {E{1, 2}, E{0, 3}}}, B));
    v.push_back(class_pattern("fig3b", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}},
         {E{0, 4}, E{3, 4}, E{0, 2}}}, B));
    v.push_back(class_pattern("fig3c", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}}, {E{0, 4}, E{3, 4}},
         {E{2, 4}, E{0, 2}}}, B));
    v.push_back(class_pattern("fig3d", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}}, {E{0, 4}, E{3, 4}},
         {E{2, 4}, E{1, 3}}}, B));

    v.push_back(class_pattern("fig4a", 4,
        {{E{0, 1}, E{2, 3}}, {E{0, 2}, E{0, 3}}}, B));
    v.push_back(class_pattern("fig4b", 4,
        {{E{0, 1}, E{2, 3}}, {E{0, 2}, E{1, 3}}, {E{0, 3}, E{1, 2}}}, B));
    v.push_back(class_pattern("fig4c", 5,
        {{E{0, 1}, E{1, 2}, E{3, 4}}, {E{2, 3}, E{0, 4}}}, B));
    v.push_back(class_pattern("fig4d", 5,
        {{E{0, 1}, E{2, 3}}, {E{0, 4}, E{1, 2}}, {E{0, 2}, E{3, 4}}}, B));
    v.push_back(class_pattern("fig4e", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}}, {E{0, 4}, E{0, 2}},
         {E{1, 3}, E{2, 4}}}, B));

    v.push_back(class_pattern("fig5a", 4,
        {{E{0, 1}, E{1, 2}, E{2, 3}, E{0, 3}}}, F));
    v.push_back(class_pattern("fig5b", 4,
        {{E{0, 1}, E{0, 2}, E{0, 3}}, {E{1, 2}, E{1, 3}}}, F));
    v.push_back(class_pattern("fig5c", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}}, {E{0, 4}, E{2, 4}},
         {E{1, 4}, E{3, 4}}}, P));
    v.push_back(class_pattern("fig5d", 5,
        {{E{0, 1}, E{2, 3}}, {E{1, 2}, E{0, 3}, E{1, 4}, E{3, 4}},
         {E{0, 2}, E{0, 4}}}, P));
    v.push_back(class_pattern("fig5e", 5,
        {{E{0, 1}, E{2, 3}, E{3, 4}}, {E{1, 2}, E{0, 3}, E{1, 4}}}, F));
    v.push_back(class_pattern("fig5f", 5,
        {{E{1, 2}, E{2, 3}, E{3, 4}}, {E{1, 4}, E{0, 1}, E{0, 3}},
         {E{0, 2}, E{0, 4}}}, F));
    v.push_back(class_pattern("fig5g", 5,
        {{E{1, 2}, E{2, 3}, E{3, 4}}, {E{1, 4}, E{0, 1}, E{0, 3}},
         {E{2, 4}, E{0, 4}}}, F));
    return v;
  }();
  return patterns;
}

/// Subset of the default set proved against one projection.
inline std::vector<ForbiddenPattern> patterns_for_scope(ColorScope scope) {
  std::vector<ForbiddenPattern> out;
  for (const ForbiddenPattern& p : default_patterns())
    if (p.scope == scope) out.push_back(p);
  return out;
}

/// Default filter for the enumeration: all class patterns plus
/// monochromatic odd cycles. The general color-cycle detector stays out;
/// its drawn instances are the fig1 patterns.
inline std::vector<ForbiddenPattern> enumeration_default_patterns() {
  std::vector<ForbiddenPattern> out;
  for (const ForbiddenPattern& p : default_patterns())
    if (p.kind != PatternKind::ColorCycle) out.push_back(p);
  return out;
}

/// Names of the configurations that the filtered enumeration leaves behind:
/// every surviving K_5 coloring contains at least one of them.
inline const std::vector<std::string>& residual_pattern_names() {
  static const std::vector<std::string> names = {"fig5c", "fig5d", "fig5e",
                                                 "fig5f", "fig5g"};
  return names;
}

}  // namespace pqc
