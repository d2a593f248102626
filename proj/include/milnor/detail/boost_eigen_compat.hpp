#pragma once

// Boost.Multiprecision 1.74 probes every type converted to a number for a
// byte-container const_iterator. Eigen 3.4 matrix expressions declare
// `const_iterator` as void, which makes that probe a hard error. This
// replacement of the trait (same guard, same names) treats a void iterator
// as "not a byte container". Later Boost releases carry the same fix.

#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP

#include <boost/mpl/has_xxx.hpp>
#include <boost/type_traits/is_integral.hpp>
#include <boost/type_traits/remove_cv.hpp>

#include <iterator>
#include <type_traits>

namespace boost { namespace multiprecision { namespace detail {

BOOST_MPL_HAS_XXX_TRAIT_NAMED_DEF(has_member_const_iterator, const_iterator, false)

template <class Iterator, bool = std::is_void<Iterator>::value>
struct is_byte_iterator {
  typedef typename boost::remove_cv<typename std::iterator_traits<Iterator>::value_type>::type value_type;
  static const bool value = boost::is_integral<value_type>::value && (sizeof(value_type) == 1);
};

template <class Iterator>
struct is_byte_iterator<Iterator, true> : public boost::false_type {};

template <class C, bool b>
struct is_byte_container_imp : public is_byte_iterator<typename C::const_iterator> {};

template <class C>
struct is_byte_container_imp<C, false> : public boost::false_type {};

template <class C>
struct is_byte_container : public is_byte_container_imp<C, has_member_const_iterator<C>::value> {};

}}}  // namespace boost::multiprecision::detail

#endif  // BOOST_IS_BYTE_CONTAINER_HPP
