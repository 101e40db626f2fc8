"""Ring handles, elements and exact scalars. Import concrete kinds from their modules."""
