#include "jcm/operator.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace jcm {

SimplicialOperator SimplicialOperator::identity(int n) {
    if (n < 0)
        throw std::invalid_argument("negative dimension");
    SimplicialOperator op;
    op.source_dim_ = n;
    op.map_.resize(n + 1);
    for (int t = 0; t <= n; ++t)
        op.map_[t] = t;
    return op;
}

SimplicialOperator SimplicialOperator::face(int i, int n) {
    if (n < 1 || i < 0 || i > n)
        throw std::invalid_argument("face d" + std::to_string(i) + " undefined in dimension " +
                                    std::to_string(n));
    SimplicialOperator op;
    op.source_dim_ = n;
    op.map_.resize(n);
    for (int t = 0; t < n; ++t)
        op.map_[t] = t < i ? t : t + 1;
    return op;
}

SimplicialOperator SimplicialOperator::degeneracy(int j, int n) {
    if (n < 0 || j < 0 || j > n)
        throw std::invalid_argument("degeneracy s" + std::to_string(j) + " undefined in dimension " +
                                    std::to_string(n));
    SimplicialOperator op;
    op.source_dim_ = n;
    op.map_.resize(n + 2);
    for (int t = 0; t <= n + 1; ++t)
        op.map_[t] = t <= j ? t : t - 1;
    return op;
}

SimplicialOperator SimplicialOperator::from_map(int source_dim, std::vector<int> map) {
    if (map.empty())
        throw std::invalid_argument("operator map must be non-empty");
    for (std::size_t t = 0; t < map.size(); ++t) {
        if (map[t] < 0 || map[t] > source_dim)
            throw std::invalid_argument("operator map value out of range");
        if (t > 0 && map[t] < map[t - 1])
            throw std::invalid_argument("operator map must be order preserving");
    }
    SimplicialOperator op;
    op.source_dim_ = source_dim;
    op.map_ = std::move(map);
    return op;
}

SimplicialOperator SimplicialOperator::canonical(int source_dim, std::vector<int> degens,
                                                 std::vector<int> faces) {
    std::sort(degens.begin(), degens.end(), std::greater<>());
    std::sort(faces.begin(), faces.end());
    std::vector<OpSymbol> word;
    for (int j : degens)
        word.push_back(OpSymbol::degeneracy(j));
    for (int i : faces)
        word.push_back(OpSymbol::face(i));
    return normalize_operator(word, source_dim);
}

SimplicialOperator SimplicialOperator::then(const SimplicialOperator& next) const {
    if (next.source_dim_ != target_dim())
        throw std::invalid_argument("operator composition dimension mismatch");
    SimplicialOperator op;
    op.source_dim_ = source_dim_;
    op.map_.resize(next.map_.size());
    for (std::size_t t = 0; t < next.map_.size(); ++t)
        op.map_[t] = map_[next.map_[t]];
    return op;
}

SimplicialOperator SimplicialOperator::derived() const {
    SimplicialOperator op;
    op.source_dim_ = source_dim_ + 1;
    op.map_.resize(map_.size() + 1);
    op.map_[0] = 0;
    for (std::size_t t = 0; t < map_.size(); ++t)
        op.map_[t + 1] = map_[t] + 1;
    return op;
}

std::vector<int> SimplicialOperator::degeneracies() const {
    std::vector<int> out;
    for (int t = target_dim() - 1; t >= 0; --t)
        if (map_[t] == map_[t + 1])
            out.push_back(t);
    return out;
}

std::vector<int> SimplicialOperator::faces() const {
    std::vector<bool> hit(source_dim_ + 1, false);
    for (int v : map_)
        hit[v] = true;
    std::vector<int> out;
    for (int i = 0; i <= source_dim_; ++i)
        if (!hit[i])
            out.push_back(i);
    return out;
}

bool SimplicialOperator::is_identity() const {
    if (target_dim() != source_dim_)
        return false;
    for (int t = 0; t <= source_dim_; ++t)
        if (map_[t] != t)
            return false;
    return true;
}

std::string SimplicialOperator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j : degeneracies()) {
        os << (first ? "" : " ") << 's' << j;
        first = false;
    }
    for (int i : faces()) {
        os << (first ? "" : " ") << 'd' << i;
        first = false;
    }
    return first ? "id" : os.str();
}

SimplicialOperator normalize_operator(const std::vector<OpSymbol>& word, int source_dim) {
    SimplicialOperator op = SimplicialOperator::identity(source_dim);
    int dim = source_dim;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->kind == OpSymbol::Kind::Face) {
            op = op.then(SimplicialOperator::face(it->index, dim));
            --dim;
        } else {
            op = op.then(SimplicialOperator::degeneracy(it->index, dim));
            ++dim;
        }
    }
    return op;
}

std::vector<OpSymbol> parse_operator_word(const std::string& text) {
    std::vector<OpSymbol> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '*' || text[pos] == '.'))
            ++pos;
    };
    skip();
    if (text.compare(pos, 2, "id") == 0 && text.find_first_not_of(' ', pos + 2) == std::string::npos)
        return out;
    while (pos < text.size()) {
        OpSymbol::Kind kind;
        if (text[pos] == 's') {
            kind = OpSymbol::Kind::Degeneracy;
            ++pos;
        } else if (text[pos] == 'd') {
            kind = OpSymbol::Kind::Face;
            ++pos;
        } else if (text.compare(pos, 3, "∂") == 0) {
            kind = OpSymbol::Kind::Face;
            pos += 3;
        } else {
            throw std::invalid_argument("bad operator symbol in '" + text + "'");
        }
        if (pos < text.size() && text[pos] == '_')
            ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("missing operator index in '" + text + "'");
        out.push_back({kind, std::stoi(text.substr(start, pos - start))});
        skip();
    }
    return out;
}

std::vector<int> epi_from_degens(int n, const std::vector<int>& degens) {
    std::vector<bool> repeat(n + 1, false);
    for (int t : degens) {
        if (t < 0 || t >= n)
            throw std::invalid_argument("degeneracy index out of range");
        repeat[t] = true;
    }
    std::vector<int> epi(n + 1);
    epi[0] = 0;
    for (int t = 0; t < n; ++t)
        epi[t + 1] = epi[t] + (repeat[t] ? 0 : 1);
    return epi;
}

std::vector<int> degens_from_epi(const std::vector<int>& epi) {
    std::vector<int> out;
    for (int t = static_cast<int>(epi.size()) - 2; t >= 0; --t)
        if (epi[t] == epi[t + 1])
            out.push_back(t);
    return out;
}

} // namespace jcm
