#pragma once

// Calculus on sets of cycle types. Two constructions produce the type set of
// a composite group from the type sets of its pieces, exactly:
//
//  - imprimitive wreath U wr V on a*b points (blocks of size a, top degree b):
//    an element is (u_1..u_b; v), and over a cycle of v of length l the
//    composite of the u_i along the cycle is a single element w of U whose
//    k-cycles each become one lk-cycle. The w per cycle range over all of U
//    independently, so the set of types depends only on the type sets below.
//
//  - intransitive direct product on a+b points: types concatenate.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "invgen/cycle_type.hpp"

namespace invgen {

// types of U wr V from types of U (degree a each) and V (degree b each);
// result types have degree a*b
inline std::vector<CycleType> wreath_ct(const std::vector<CycleType>& bottom,
                                        const std::vector<CycleType>& top) {
  std::set<CycleType> out;
  for (const CycleType& nu : top) {
    // one choice from `bottom` per cycle of nu, accumulated as sorted parts;
    // duplicates collapse at every step, so intermediates stay few
    std::set<std::vector<int>> partials{{}};
    for (int l : nu.parts()) {
      std::set<std::vector<int>> next;
      for (const auto& done : partials)
        for (const CycleType& lam : bottom) {
          std::vector<int> v = done;
          for (int k : lam.parts()) v.push_back(l * k);
          std::sort(v.begin(), v.end(), std::greater<int>());
          next.insert(std::move(v));
        }
      partials = std::move(next);
    }
    for (const auto& v : partials) out.insert(CycleType(v));
  }
  return {out.begin(), out.end()};
}

// types of U x V acting on disjoint orbits
inline std::vector<CycleType> product_ct(const std::vector<CycleType>& left,
                                         const std::vector<CycleType>& right) {
  std::set<CycleType> out;
  for (const CycleType& x : left)
    for (const CycleType& y : right) {
      std::vector<int> v = x.parts();
      v.insert(v.end(), y.parts().begin(), y.parts().end());
      out.insert(CycleType(v));
    }
  return {out.begin(), out.end()};
}

}  // namespace invgen
