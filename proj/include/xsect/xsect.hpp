#ifndef XSECT_XSECT_HPP
#define XSECT_XSECT_HPP

#include <xsect/certificate.hpp>
#include <xsect/chain.hpp>
#include <xsect/compression.hpp>
#include <xsect/error.hpp>
#include <xsect/general.hpp>
#include <xsect/io.hpp>
#include <xsect/matrix.hpp>
#include <xsect/random.hpp>
#include <xsect/scalar.hpp>
#include <xsect/selfcheck.hpp>
#include <xsect/shift.hpp>
#include <xsect/subspace.hpp>

#endif // XSECT_XSECT_HPP
