#pragma once

#include "jcm/chain.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jcm {

/// {"modulus": m, "degree": d or null, "terms": [{"label": "...", "coefficient": c}, ...]}
nlohmann::json chain_to_json(const Chain& c);

/// What a textual label is expected to look like: a cell of a set (with
/// "y-k0" allowed when `reduced`), a tensor of fixed factors, or a cobar/free
/// word over a letter shape.
struct LabelShape {
    enum class Kind { Cell, Tensor, Cobar, Free };
    Kind kind = Kind::Cell;
    SetPtr set;
    bool reduced = false;
    std::vector<LabelShape> parts;

    static LabelShape cell(SetPtr set, bool reduced = false) { return {Kind::Cell, std::move(set), reduced, {}}; }
    static LabelShape tensor(std::vector<LabelShape> parts) { return {Kind::Tensor, nullptr, false, std::move(parts)}; }
    static LabelShape cobar(LabelShape letter) { return {Kind::Cobar, nullptr, false, {std::move(letter)}}; }
    static LabelShape free_word(SetPtr set) { return {Kind::Free, nullptr, false, {cell(std::move(set), true)}}; }
};

/// Parses labels in the printed syntax: "[a|b]", "{a|b}", "a⊗b", "y-k0" and
/// the simplex syntax of the set.  Inside a tensor factor "1" stands for the
/// basepoint.  Throws std::invalid_argument on malformed text.
Label parse_label(const std::string& text, const LabelShape& shape);

/// Reads either a label string or a chain object in the format above.
Chain chain_from_json(const nlohmann::json& j, const LabelShape& shape);

} // namespace jcm
