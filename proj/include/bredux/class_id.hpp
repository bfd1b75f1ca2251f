#ifndef BREDUX_CLASS_ID_HPP
#define BREDUX_CLASS_ID_HPP

#include "bredux/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace bredux {

// The eight graph classes under study: spiders (T), caterpillars with
// hairs (Q), and their complement / line-graph / triangle-expansion /
// weighted-completion images.
enum class ClassId { T, Q, CoT, LT, CoLT, RQ, KQ, KRQ };

inline constexpr std::array<ClassId, 8> all_class_ids = {
    ClassId::T,   ClassId::Q,  ClassId::CoT, ClassId::LT,
    ClassId::CoLT, ClassId::RQ, ClassId::KQ,  ClassId::KRQ,
};

inline std::string_view class_token(ClassId c)
{
    switch (c) {
    case ClassId::T: return "t";
    case ClassId::Q: return "q";
    case ClassId::CoT: return "cot";
    case ClassId::LT: return "lt";
    case ClassId::CoLT: return "colt";
    case ClassId::RQ: return "rq";
    case ClassId::KQ: return "kq";
    case ClassId::KRQ: return "krq";
    }
    throw Error("unknown class id");
}

inline ClassId class_from_token(std::string_view token)
{
    for (ClassId c : all_class_ids)
        if (class_token(c) == token)
            return c;
    throw Error("unknown class '" + std::string(token)
                + "' (expected one of t q cot lt colt rq kq krq)");
}

// KQ and KRQ members carry edge weights; the rest are plain graphs.
inline bool class_is_weighted(ClassId c)
{
    return c == ClassId::KQ || c == ClassId::KRQ;
}

} // namespace bredux

#endif
