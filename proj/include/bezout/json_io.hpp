#pragma once

// JSON wire formats: the matrix schema used by the CLI and the serialized
// forms of reductions and transcripts.  Big values travel as decimal strings.

#include <nlohmann/json.hpp>

#include "format.hpp"
#include "matrix.hpp"

namespace bezout {

using nlohmann::json;

inline json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"ring", m.ring.str()}, {"rows", m.rows}, {"cols", m.cols},
                {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
    RingDescriptor ring = RingDescriptor::parse(j.at("ring").get<std::string>());
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 0 || cols < 0) throw parse_error("negative matrix dimension");
    const json& entries = j.at("entries");
    if ((int)entries.size() != rows) throw parse_error("entry row count mismatch");
    Matrix m(rows, cols, ring);
    for (int i = 0; i < rows; ++i) {
        if ((int)entries[i].size() != cols) throw parse_error("entry col count mismatch");
        for (int jj = 0; jj < cols; ++jj)
            m.at(i, jj) = parse_element(ring, entries[i][jj].get<std::string>());
    }
    return m;
}

inline json op_to_json(const ElementaryOp& op) {
    static const char* names[] = {"add_left", "add_right", "swap_rows", "swap_cols",
                                  "scale_row_left", "scale_col_right", "block_left",
                                  "block_right"};
    json j{{"kind", names[(int)op.kind]}, {"i", op.i}, {"j", op.j}};
    switch (op.kind) {
        case ElementaryOp::Kind::AddLeftMultiple:
        case ElementaryOp::Kind::AddRightMultiple:
        case ElementaryOp::Kind::ScaleRowLeft:
        case ElementaryOp::Kind::ScaleColRight:
            j["lambda"] = to_string(op.lambda);
            break;
        case ElementaryOp::Kind::BlockLeft:
        case ElementaryOp::Kind::BlockRight: {
            json b = json::array(), bi = json::array();
            for (int k = 0; k < 4; ++k) b.push_back(to_string(op.block[k]));
            for (int k = 4; k < 8; ++k) bi.push_back(to_string(op.block[k]));
            j["block"] = std::move(b);
            j["block_inv"] = std::move(bi);
            break;
        }
        default: break;
    }
    return j;
}

inline json transcript_to_json(const OpTranscript& t) {
    json left = json::array(), right = json::array();
    for (const auto& op : t.left_ops) left.push_back(op_to_json(op));
    for (const auto& op : t.right_ops) right.push_back(op_to_json(op));
    return json{{"left_ops", std::move(left)}, {"right_ops", std::move(right)}};
}

}  // namespace bezout
