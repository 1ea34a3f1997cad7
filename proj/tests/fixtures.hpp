#pragma once

// Shared test documents.
//
// DOC-1: plain hierarchy, tree graph.
// DOC-2: two interleaved elements sharing a text node.
// DOC-3: overlap chain a~b~c without a~c (overlap is not transitive).
// FIG2:  seven elements in a dense interleave; at d's close, f's children
//        are the texts "could be" and "increased" but only "increased"
//        may be adopted by d ("could be" already reaches d through e).
// MOVIE: scene/genre corpus for the overlap query examples.

namespace fixtures {

inline constexpr const char* kDoc1Nested = "<r><a>t1</a><b>t2</b></r>";

// ordinals: r=(1,9) a=(2,6) b=(4,8) t1@3 t2@5 t3@7
inline constexpr const char* kDoc2 =
    "<r sID=\"r\"/><a sID=\"a\"/>t1<b sID=\"b\"/>t2<a eID=\"a\"/>t3"
    "<b eID=\"b\"/><r eID=\"r\"/>";

// ordinals: r=(1,8) a=(2,4) b=(3,6) c=(5,7)
inline constexpr const char* kDoc3 =
    "<r sID=\"r\"/><a sID=\"a\"/><b sID=\"b\"/><a eID=\"a\"/><c sID=\"c\"/>"
    "<b eID=\"b\"/><c eID=\"c\"/><r eID=\"r\"/>";

// ordinals: a=(1,17) b=(2,11) c=(3,13) d=(4,10) e=(5,8) f=(6,14) g=(12,16)
// texts: "could be"@7 "increased"@9 "finally"@15
inline constexpr const char* kFig2 =
    "<a sID=\"a\"/><b sID=\"b\"/><c sID=\"c\"/><d sID=\"d\"/><e sID=\"e\"/>"
    "<f sID=\"f\"/>could be<e eID=\"e\"/>increased<d eID=\"d\"/><b eID=\"b\"/>"
    "<g sID=\"g\"/><c eID=\"c\"/><f eID=\"f\"/>finally<g eID=\"g\"/><a eID=\"a\"/>";

// ordinals: video=(1,14) romance=(2,8) love=(3,5) dream=(6,11) musical=(9,13)
// the dream scene interleaves with both genre entries; love sits inside romance
inline constexpr const char* kMovie =
    "<video sID=\"v\"/><genre sID=\"romance\"/><scene sID=\"love\"/>love scene"
    "<scene eID=\"love\"/><scene sID=\"dream\"/>dream part one<genre eID=\"romance\"/>"
    "<genre sID=\"musical\"/>dream song<scene eID=\"dream\"/>finale"
    "<genre eID=\"musical\"/><video eID=\"v\"/>";

// DOC-2 variant: c closes inside the a/b interleave region, gaining both
// a and b as parents. ordinals: r=(1,11) a=(2,8) b=(4,10) c=(5,7)
inline constexpr const char* kDoc2TwoParent =
    "<r sID=\"r\"/><a sID=\"a\"/>t1<b sID=\"b\"/><c sID=\"c\"/>t2<c eID=\"c\"/>"
    "<a eID=\"a\"/>t3<b eID=\"b\"/><r eID=\"r\"/>";

}  // namespace fixtures
