#pragma once

#include <memory>
#include <string>
#include <vector>

#include "svol/errors.hpp"

namespace svol {

/// Ordered list of named variable blocks. A variable is identified by its
/// flat index; block and coordinate are recoverable from it. Tables are
/// shared immutably between all values built over them.
class VarTable {
  public:
    struct Block {
        std::string name;
        int dim;
        bool operator==(const Block&) const = default;
    };

    static std::shared_ptr<const VarTable> make(std::vector<Block> blocks) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (blocks[i].dim < 1)
                throw structural_error("VarTable: block dimension must be >= 1");
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if (blocks[i].name == blocks[j].name)
                    throw structural_error("VarTable: duplicate block name '" + blocks[i].name + "'");
        }
        return std::shared_ptr<const VarTable>(new VarTable(std::move(blocks)));
    }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
    int total_vars() const { return offsets_.back(); }

    int var_index(int block, int coord) const {
        if (block < 0 || block >= block_count() || coord < 0 || coord >= blocks_[block].dim)
            throw structural_error("VarTable: variable identity out of range");
        return offsets_[static_cast<std::size_t>(block)] + coord;
    }
    int block_of(int var) const {
        for (int b = 0; b < block_count(); ++b)
            if (var < offsets_[static_cast<std::size_t>(b) + 1]) return b;
        throw structural_error("VarTable: variable index out of range");
    }
    int coord_of(int var) const { return var - offsets_[static_cast<std::size_t>(block_of(var))]; }

    /// Textual name of a variable, e.g. block "x" coordinate 0 -> "x1".
    std::string var_name(int var) const {
        int b = block_of(var);
        return blocks_[static_cast<std::size_t>(b)].name + std::to_string(coord_of(var) + 1);
    }

    /// Flat index for a textual name, or -1 if it names no variable.
    int find_var(const std::string& name) const {
        for (int v = 0; v < total_vars(); ++v)
            if (var_name(v) == name) return v;
        return -1;
    }

    bool operator==(const VarTable& other) const { return blocks_ == other.blocks_; }

  private:
    explicit VarTable(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        offsets_.push_back(0);
        for (const Block& b : blocks_) offsets_.push_back(offsets_.back() + b.dim);
    }

    std::vector<Block> blocks_;
    std::vector<int> offsets_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace svol
