#pragma once

#include "cyclebound/errors.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclebound {

struct BlockItem;

/// A manifest value: "string", number, identifier, [list] or { block }.
struct BlockValue {
    enum class Kind { String, Number, Ident, List, Block };
    Kind kind = Kind::Block;
    std::string text;
    std::vector<BlockValue> list;
    std::vector<BlockItem> items;
    int line = 0;
    int column = 0;

    bool is_scalar() const { return kind == Kind::String || kind == Kind::Number || kind == Kind::Ident; }
    /// First item with this key, if any.
    const BlockItem *find(std::string_view key) const;
    std::vector<const BlockItem *> find_all(std::string_view key) const;
};

/// `key: value` or `key [label] { ... }`.
struct BlockItem {
    std::string key;
    std::optional<std::string> label;
    BlockValue value;
    int line = 0;
    int column = 0;
};

/// Parses a whole manifest into its top-level block. `#` starts a comment.
BlockValue parse_blocks(std::string_view text);

} // namespace cyclebound
