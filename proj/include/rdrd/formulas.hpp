#ifndef RDRD_FORMULAS_HPP
#define RDRD_FORMULAS_HPP

#include <optional>
#include <string>

#include "rdrd/families.hpp"

namespace rdrd {

struct Prediction {
    int value;
    std::string source;  // which closed form or table entry produced it
    std::string note;
};

// Closed-form restrained double Roman domination number where one is known;
// nullopt where no formula applies (e.g. general wounded spiders).
std::optional<Prediction> predicted_rdrd(const FamilySpec& spec);

}  // namespace rdrd

#endif
