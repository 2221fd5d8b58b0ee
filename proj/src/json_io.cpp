#include "jcm/json_io.hpp"

#include <stdexcept>

namespace jcm {

nlohmann::json chain_to_json(const Chain& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, k] : c)
        terms.push_back({{"label", l.to_string()}, {"coefficient", k}});
    nlohmann::json degree = nullptr;
    if (auto d = c.degree())
        degree = *d;
    return {{"modulus", c.modulus()}, {"degree", degree}, {"terms", terms}};
}

namespace {

const std::string kTensor = "⊗";

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

// Split at top-level occurrences of `sep` (outside (), [] and {}).
std::vector<std::string> split_top(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        else if (depth == 0 && s.compare(k, sep.size(), sep) == 0) {
            out.push_back(s.substr(start, k - start));
            start = k + sep.size();
            k += sep.size() - 1;
        }
        if (depth < 0)
            throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    }
    if (depth != 0)
        throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    out.push_back(s.substr(start));
    return out;
}

// Outer brackets enclosing the whole string.
bool wrapped(const std::string& s, char open, char close) {
    if (s.size() < 2 || s.front() != open || s.back() != close)
        return false;
    int depth = 0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        if (s[k] == '(' || s[k] == '[' || s[k] == '{')
            ++depth;
        else if (s[k] == ')' || s[k] == ']' || s[k] == '}')
            --depth;
        if (depth == 0)
            return false;
    }
    return true;
}

Label parse_cell(const std::string& text, const LabelShape& shape) {
    const SimplicialSet& K = *shape.set;
    if (text == "1")
        return Label::of_cell(K.basepoint(0));
    if (shape.reduced) {
        // y-k0; a '-' right after '^' belongs to an exponent
        for (std::size_t k = text.size(); k-- > 1;)
            if (text[k] == '-' && text[k - 1] != '^') {
                Simplex y = K.parse(trim(text.substr(0, k))), base = K.parse(trim(text.substr(k + 1)));
                if (y.dim() != 0 || !K.is_basepoint(base))
                    throw std::invalid_argument("'" + text + "' is not of the form y-k0");
                return Label::reduced_vertex(y, base);
            }
    }
    Simplex x = K.parse(text);
    if (x.is_degenerate())
        throw std::invalid_argument("'" + text + "' is degenerate and is zero in normalized chains");
    return Label::of_cell(x);
}

} // namespace

Label parse_label(const std::string& raw, const LabelShape& shape) {
    const std::string text = trim(raw);
    if (text.empty())
        throw std::invalid_argument("empty label");
    switch (shape.kind) {
    case LabelShape::Kind::Cell:
        return parse_cell(text, shape);
    case LabelShape::Kind::Tensor: {
        std::string body = text;
        auto parts = split_top(body, kTensor);
        if (parts.size() == 1 && wrapped(body, '(', ')'))
            parts = split_top(body.substr(1, body.size() - 2), kTensor);
        if (parts.size() != shape.parts.size())
            throw std::invalid_argument("expected " + std::to_string(shape.parts.size()) + " tensor factors in '" +
                                        text + "'");
        std::vector<Label> factors;
        for (std::size_t k = 0; k < parts.size(); ++k)
            factors.push_back(parse_label(parts[k], shape.parts[k]));
        return Label::tensor(std::move(factors));
    }
    case LabelShape::Kind::Cobar:
    case LabelShape::Kind::Free: {
        const bool cobar = shape.kind == LabelShape::Kind::Cobar;
        if (!wrapped(text, cobar ? '[' : '{', cobar ? ']' : '}'))
            throw std::invalid_argument("expected a word in " + std::string(cobar ? "[...]" : "{...}") + ", got '" +
                                        text + "'");
        std::vector<Label> letters;
        const std::string inner = trim(text.substr(1, text.size() - 2));
        if (!inner.empty())
            for (const auto& part : split_top(inner, "|"))
                letters.push_back(parse_label(part, shape.parts.at(0)));
        return cobar ? Label::cobar(std::move(letters)) : Label::free_word(std::move(letters));
    }
    }
    throw std::logic_error("unreachable");
}

Chain chain_from_json(const nlohmann::json& j, const LabelShape& shape) {
    if (j.is_string())
        return Chain::of(parse_label(j.get<std::string>(), shape));
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("a chain is a label string or an object with a \"terms\" array");
    Chain out(j.value("modulus", 0LL));
    for (const auto& t : j["terms"]) {
        if (!t.contains("label") || !t["label"].is_string())
            throw std::invalid_argument("every term needs a \"label\" string");
        out.add(parse_label(t["label"].get<std::string>(), shape), t.value("coefficient", 1LL));
    }
    return out;
}

} // namespace jcm
