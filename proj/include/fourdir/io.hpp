#pragma once

#include <iosfwd>
#include <string>

#include "fourdir/analysis.hpp"
#include "fourdir/subdivision.hpp"

namespace fourdir {

// On-disk description of a mask: enough to reconstruct the exact symbol
// and place it on the lattice.
struct MaskDocument {
    std::string family = "custom";
    long n = 0;
    long l = 0;
    std::vector<Rational> mu;
    MaskMatrix matrix;
    SupportOctagon support;
};

MaskDocument make_mask_document(const SchemeSymbol& s);

std::string mask_document_to_json(const MaskDocument& doc);
MaskDocument mask_document_from_json(const std::string& text);

// Human-readable fraction matrix in the print layout (z2 decreasing down
// the rows, z1 increasing across the columns).
std::string format_mask_matrix(const MaskMatrix& m);
std::string format_mask_csv(const MaskMatrix& m);

// Grid CSV: two comment lines carrying level and window, then
// alpha1,alpha2,value rows with exact fraction values.
void write_grid_csv(std::ostream& os, const GridFunction& g);
GridFunction read_grid_csv(std::istream& is);

// Binary P5, 16-bit big-endian, min-max normalized over the window; the
// normalization constants go to "<path>.norm.txt" as exact fractions.
void write_grid_pgm(const std::string& path, const GridFunction& g);

}  // namespace fourdir
