// populated in a later change
