#pragma once

#include <vector>

#include "seifert/seifert_data.hpp"

namespace seifert::testsupport {

inline SeifertData sigma_2_3_7() {
    return make_seifert(Int(-1), {{Int(2), Int(1)}, {Int(3), Int(1)}, {Int(7), Int(1)}});
}

inline SeifertData sigma_2_3_5() {
    return make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(3), Int(2)}, {Int(5), Int(4)}});
}

// Link of the D4 singularity: H = Z/2 x Z/2.
inline SeifertData d4() {
    return make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(2), Int(1)}, {Int(2), Int(1)}});
}

// e = -2/3, o = 4, H cyclic of order 8.
inline SeifertData cyclic8() {
    return make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(2), Int(1)}, {Int(3), Int(1)}});
}

// A deterministic mix of small manifolds covering trivial/cyclic/non-cyclic
// homology, o = 1 and o > 1, three to five arms.  Orders stay <= 200.
inline std::vector<SeifertData> small_family() {
    std::vector<SeifertData> family;
    family.push_back(sigma_2_3_7());                                                       // |H| = 1
    family.push_back(sigma_2_3_5());                                                       // |H| = 1
    family.push_back(d4());                                                                // |H| = 4
    family.push_back(cyclic8());                                                           // |H| = 8
    family.push_back(make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(3), Int(2)}, {Int(7), Int(3)}}));   // 17
    family.push_back(make_seifert(Int(-2), {{Int(3), Int(1)}, {Int(3), Int(1)}, {Int(3), Int(1)}}));   // 27
    family.push_back(make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(4), Int(1)}, {Int(4), Int(3)}}));   // 16
    family.push_back(make_seifert(Int(-1), {{Int(3), Int(1)}, {Int(4), Int(1)}, {Int(5), Int(1)}}));   // 13
    family.push_back(make_seifert(Int(-3), {{Int(2), Int(1)}, {Int(2), Int(1)}, {Int(2), Int(1)}, {Int(2), Int(1)}}));  // 16, o = 2
    family.push_back(make_seifert(Int(-3), {{Int(2), Int(1)}, {Int(3), Int(1)}, {Int(3), Int(2)}, {Int(4), Int(3)}}));  // 54
    family.push_back(make_seifert(Int(-3), {{Int(2), Int(1)}, {Int(3), Int(2)}, {Int(5), Int(3)}}));   // 37
    family.push_back(make_seifert(Int(-3), {{Int(2), Int(1)}, {Int(2), Int(1)}, {Int(2), Int(1)}, {Int(3), Int(1)}, {Int(3), Int(2)}}));  // 36
    family.push_back(make_seifert(Int(-2), {{Int(5), Int(2)}, {Int(5), Int(3)}, {Int(5), Int(4)}}));   // 25, o = 1
    family.push_back(make_seifert(Int(-3), {{Int(4), Int(3)}, {Int(5), Int(4)}, {Int(6), Int(5)}}));   // 74, o = 37
    family.push_back(make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(3), Int(2)}, {Int(6), Int(1)}}));   // 24, o = 4
    family.push_back(make_seifert(Int(-2), {{Int(2), Int(1)}, {Int(5), Int(2)}, {Int(7), Int(2)}}));   // 57, cyclic, o = 57
    family.push_back(make_seifert(Int(-4), {{Int(3), Int(2)}, {Int(4), Int(3)}, {Int(5), Int(4)}}));   // 107
    family.push_back(make_seifert(Int(-2), {{Int(4), Int(1)}, {Int(4), Int(1)}, {Int(4), Int(1)}}));   // 80, o = 5
    return family;
}

}  // namespace seifert::testsupport
