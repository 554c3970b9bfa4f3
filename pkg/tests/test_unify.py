import unittest

from forumlib.engine.unify import BindingStore, unify
from forumlib.syntax import Var, App, Atom


def f(*args):
    return App('f', args)


c, d = App('c'), App('d')


class TestUnify(unittest.TestCase):

    def setUp(self):
        self.store = BindingStore()

    def test_bind(self):
        x, = self.store.new_metas([Var('x')])
        self.assertTrue(unify(x, f(c), self.store))
        self.assertEqual(f(c), self.store.resolve(x))

    def test_symmetric(self):
        x, = self.store.new_metas([Var('x')])
        self.assertTrue(unify(f(c, d), f(c, x), self.store))
        self.assertEqual(d, self.store.resolve(x))

    def test_clash(self):
        self.assertFalse(unify(f(c), f(d), self.store))
        self.assertFalse(unify(f(c), App('g', [c]), self.store))
        self.assertFalse(unify(f(c), f(c, c), self.store))

    def test_occurs_check(self):
        x, = self.store.new_metas([Var('x')])
        self.assertFalse(unify(x, f(x), self.store))
        self.assertEqual({}, self.store.bindings)

    def test_chains(self):
        x, y = self.store.new_metas([Var('x'), Var('y')])
        self.assertTrue(unify(x, y, self.store))
        self.assertTrue(unify(y, f(c), self.store))
        self.assertEqual(f(c), self.store.resolve(x))
        self.assertFalse(unify(x, f(d), self.store))

    def test_level_check(self):
        x, = self.store.new_metas([Var('x')])
        e, = self.store.new_eigens([Var('y')])
        self.assertGreater(e.level, x.level)
        self.assertFalse(unify(x, e, self.store))
        y, = self.store.new_metas([Var('y')])
        self.assertTrue(unify(y, e, self.store))

    def test_binding_lowers_levels(self):
        x, = self.store.new_metas([Var('x')])
        e, = self.store.new_eigens([Var('e')])
        y, = self.store.new_metas([Var('y')])
        self.assertTrue(unify(x, f(y), self.store))
        self.assertEqual(x.level, self.store.level_of(y))
        # y now stands for a term visible to x, so it cannot take e
        self.assertFalse(unify(y, e, self.store))

    def test_failed_unification_leaves_store(self):
        x, y = self.store.new_metas([Var('x'), Var('y')])
        mark = self.store.mark()
        self.assertFalse(unify(f(x, c), f(d, y, c), self.store))
        self.assertFalse(unify(f(x, c), f(d, d), self.store))
        self.assertEqual(mark, self.store.mark())
        self.assertEqual(x, self.store.resolve(x))

    def test_undo(self):
        x, y = self.store.new_metas([Var('x'), Var('y')])
        mark = self.store.mark()
        unify(x, c, self.store)
        unify(y, f(x), self.store)
        self.assertEqual(f(c), self.store.resolve(y))
        self.store.undo(mark)
        self.assertEqual(y, self.store.resolve(y))
        self.assertEqual({}, self.store.bindings)

    def test_eigen_rigid(self):
        e1, e2 = self.store.new_eigens([Var('a'), Var('b')])
        self.assertTrue(unify(e1, e1, self.store))
        self.assertFalse(unify(e1, e2, self.store))
        self.assertFalse(unify(e1, c, self.store))

    def test_atoms(self):
        x, = self.store.new_metas([Var('x')])
        self.assertTrue(self.store.unify_atoms(Atom('p', [x]), Atom('p', [c])))
        self.assertFalse(self.store.unify_atoms(Atom('p', [x]), Atom('q', [c])))
        self.assertFalse(self.store.unify_atoms(Atom('p', [x]), Atom('p', [d])))
        self.assertEqual(Atom('p', [c]), self.store.resolve(Atom('p', [x])))


# main
if __name__ == '__main__':
    unittest.main()
