#pragma once

#include <string>
#include <vector>

#include "polyvar/cauchy.hpp"
#include "polyvar/conjectures.hpp"
#include "polyvar/operators.hpp"
#include "polyvar/poly.hpp"
#include "polyvar/search.hpp"

namespace polyvar {

// String-level JSON codecs so the serialization backend stays out of the
// installed interface.
//
// Polynomial: {"coeffs":[[re,im],...]} ascending, or
//             {"roots":[{"re":..,"im":..,"mult":..},...],"leading":[re,im]}
// Measure:    {"atoms":[{"re":..,"im":..,"w":..},...]} (w defaults to 1)
// Toeplitz:   {"a":[[re,im],...]} giving a_1..a_{n-1}

std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

std::string to_json(const PointMeasure& mu);
PointMeasure measure_from_json(const std::string& text);

std::string to_json(const Verdict& v);
std::string csv_row(const std::string& instance, const Verdict& v);
std::string csv_header();

std::string to_json(const ToeplitzInstance& t);
std::vector<cplx> toeplitz_symbol_from_json(const std::string& text);

std::string to_json(const SearchRecord& rec);
std::string search_csv(const SearchRecord& rec, int degree, double p,
                       unsigned seed);

enum class InputKind { Polynomial, Measure, Toeplitz };

/// Classify an input document by its top-level keys.
InputKind detect_input(const std::string& text);

}  // namespace polyvar
